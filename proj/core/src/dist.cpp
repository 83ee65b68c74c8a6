#include "allpay/dist.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "allpay/errors.hpp"

namespace allpay {

FiniteDist FiniteDist::from_weights(Weights w) {
    std::map<int, Rational> merged;
    for (auto& [bid, p] : w) {
        if (bid < 0) throw invalid_parameter_error("bid levels must be nonnegative");
        merged[bid] += p;
    }
    Rational total;
    FiniteDist d;
    d.w_.reserve(merged.size());
    for (auto& [bid, p] : merged) {
        if (p.sign() <= 0) throw invalid_parameter_error("distribution weights must be strictly positive");
        total += p;
        d.w_.emplace_back(bid, p);
    }
    if (total != Rational(1)) throw invalid_mixture_error("distribution weights must sum to exactly 1");
    return d;
}

Rational FiniteDist::prob(int k) const {
    auto it = std::lower_bound(w_.begin(), w_.end(), k,
                               [](const auto& e, int key) { return e.first < key; });
    if (it != w_.end() && it->first == k) return it->second;
    return Rational(0);
}

Rational FiniteDist::tail(int k) const {
    Rational t;
    for (auto it = w_.rbegin(); it != w_.rend() && it->first >= k; ++it) t += it->second;
    return t;
}

Rational FiniteDist::expectation() const {
    Rational e;
    for (const auto& [bid, p] : w_) e += Rational(bid) * p;
    return e;
}

FiniteDist dirac(int k) {
    if (k < 0) throw invalid_parameter_error("dirac: bid must be nonnegative");
    return FiniteDist::from_weights({{k, Rational(1)}});
}

FiniteDist uniform_odd(int m) {
    if (m < 1) throw invalid_parameter_error("uniform_odd: need m >= 1");
    FiniteDist::Weights w;
    for (int i = 1; i <= m; ++i) w.emplace_back(2 * i - 1, Rational(1, m));
    return FiniteDist::from_weights(std::move(w));
}

FiniteDist uniform_even(int m) {
    if (m < 0) throw invalid_parameter_error("uniform_even: need m >= 0");
    FiniteDist::Weights w;
    for (int i = 0; i <= m; ++i) w.emplace_back(2 * i, Rational(1, m + 1));
    return FiniteDist::from_weights(std::move(w));
}

FiniteDist uniform_odd_shift(int m) {
    if (m < 2) throw invalid_parameter_error("uniform_odd_shift: need m >= 2");
    FiniteDist::Weights w;
    for (int i = 1; i <= m - 1; ++i) w.emplace_back(2 * i, Rational(1, m - 1));
    return FiniteDist::from_weights(std::move(w));
}

FiniteDist w_dist(int j, int m) {
    if (m < 2 || j < 1 || j > m - 1) throw invalid_parameter_error("w_dist: need m >= 2 and 1 <= j <= m-1");
    FiniteDist::Weights w;
    w.emplace_back(0, Rational(1, 2 * m));
    for (int i = 1; i <= j - 1; ++i) w.emplace_back(2 * i, Rational(1, m));
    w.emplace_back(2 * j, Rational(1, 2 * m));
    for (int i = j + 1; i <= m; ++i) w.emplace_back(2 * i - 1, Rational(1, m));
    return FiniteDist::from_weights(std::move(w));
}

FiniteDist v_dist(int j, int m) {
    if (m < 1 || j < 1 || j > m) throw invalid_parameter_error("v_dist: need m >= 1 and 1 <= j <= m");
    FiniteDist::Weights w;
    for (int i = 1; i <= j - 1; ++i) w.emplace_back(2 * i - 1, Rational(2, 2 * m + 1));
    w.emplace_back(2 * j - 1, Rational(1, 2 * m + 1));
    for (int i = j; i <= m; ++i) w.emplace_back(2 * i, Rational(2, 2 * m + 1));
    return FiniteDist::from_weights(std::move(w));
}

FiniteDist mix(const std::vector<std::pair<Rational, FiniteDist>>& parts) {
    if (parts.empty()) throw invalid_mixture_error("mix: at least one component required");
    Rational total;
    std::map<int, Rational> acc;
    for (const auto& [weight, part] : parts) {
        if (weight.sign() < 0) throw invalid_mixture_error("mix: negative component weight");
        total += weight;
        if (weight.is_zero()) continue;
        for (const auto& [bid, p] : part.weights()) acc[bid] += weight * p;
    }
    if (total != Rational(1)) throw invalid_mixture_error("mix: component weights must sum to exactly 1");
    FiniteDist::Weights w(acc.begin(), acc.end());
    return FiniteDist::from_weights(std::move(w));
}

Rational expectation(const FiniteDist& d) { return d.expectation(); }

Rational tail_prob(const FiniteDist& d, int k) { return d.tail(k); }

std::string dist_to_json(const FiniteDist& d) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [bid, p] : d.weights()) arr.push_back({bid, p.str()});
    return arr.dump();
}

FiniteDist dist_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw invalid_parameter_error("distribution JSON must be an array of [bid, \"p/q\"] pairs");
    FiniteDist::Weights w;
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_string())
            throw invalid_parameter_error("distribution JSON entries must be [bid, \"p/q\"]");
        w.emplace_back(entry[0].get<int>(), Rational::parse(entry[1].get<std::string>()));
    }
    return FiniteDist::from_weights(std::move(w));
}

}  // namespace allpay
