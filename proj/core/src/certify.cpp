#include "allpay/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "allpay/errors.hpp"
#include "allpay/payoff.hpp"

namespace allpay {

namespace {

const Rational kZero(0);
const Rational kOne(1);

Rational pure_bid_payoff(const Rational& v, int k, const FiniteDist& opp) {
    // win below k, tie at k
    Rational win = kOne - opp.tail(k);
    Rational tie = opp.prob(k);
    return v * win + v / 2 * tie - Rational(k);
}

// All supported bids must be best replies; equivalent to a zero gain.
bool support_in_argmax(const FiniteDist& d, const std::vector<int>& argmax) {
    for (const auto& [bid, p] : d.weights())
        if (std::find(argmax.begin(), argmax.end(), bid) == argmax.end()) return false;
    return true;
}

}  // namespace

BestResponse best_response(const Rational& v, const FiniteDist& opponent) {
    if (v.sign() <= 0) throw invalid_valuation_error("best_response: prize value must be positive");
    const int limit = opponent.max_support() + 1;
    BestResponse br;
    br.value = pure_bid_payoff(v, 0, opponent);
    br.argmax = {0};
    for (int k = 1; k <= limit; ++k) {
        Rational p = pure_bid_payoff(v, k, opponent);
        if (p > br.value) {
            br.value = p;
            br.argmax = {k};
        } else if (p == br.value) {
            br.argmax.push_back(k);
        }
    }
    return br;
}

Certificate certify_allpay(const Valuations& v, const FiniteDist& x, const FiniteDist& y) {
    Certificate cert;
    BestResponse br1 = best_response(v.v1, y);
    BestResponse br2 = best_response(v.v2, x);

    cert.max_gain_p1 = br1.value - allpay_payoff(v.v1, x, y);
    cert.max_gain_p2 = br2.value - allpay_payoff(v.v2, y, x);
    cert.best_deviation_p1 = dirac(br1.argmax.front());
    cert.best_deviation_p2 = dirac(br2.argmax.front());
    cert.truncation_bound = std::max(y.max_support(), x.max_support()) + 1;

    bool supported = support_in_argmax(x, br1.argmax) && support_in_argmax(y, br2.argmax);
    cert.is_equilibrium = cert.max_gain_p1.is_zero() && cert.max_gain_p2.is_zero();
    if (supported != cert.is_equilibrium)
        throw std::logic_error("certify_allpay: support test and gain test disagree");
    return cert;
}

namespace {

struct LottoSide {
    Rational gain;
    FiniteDist deviation;
};

// Best fixed-mean deviation against opp, relative to baseline H value `h0`.
// Extreme points: dirac(mean) when the mean is integral, else/also every
// two-point distribution i < mean < j with weights forced by the mean.
LottoSide lotto_best(const FiniteDist& self, const FiniteDist& opp, const Rational& h0, int limit) {
    const Rational mean = self.expectation();

    // pure[k] = Pr(opp < k) - Pr(opp > k), the h_value of a point mass at k
    std::vector<Rational> pure(static_cast<std::size_t>(limit) + 1);
    for (int k = 0; k <= limit; ++k)
        pure[static_cast<std::size_t>(k)] = kOne - opp.tail(k) - opp.tail(k + 1);

    LottoSide best{kZero, self};
    auto consider = [&](const Rational& h, FiniteDist d) {
        Rational gain = h - h0;
        if (gain > best.gain) best = {gain, std::move(d)};
    };

    if (mean.is_integer()) {
        int k = mean.floor_int();
        consider(pure[static_cast<std::size_t>(k)], dirac(k));
    }
    int i_hi = mean.floor_int();
    if (Rational(i_hi) == mean) --i_hi;  // need i strictly below the mean
    for (int i = 0; i <= i_hi; ++i) {
        for (int j = i + 1; j <= limit; ++j) {
            if (Rational(j) <= mean) continue;
            Rational wj = (mean - i) / (j - i);
            Rational h = (kOne - wj) * pure[static_cast<std::size_t>(i)] + wj * pure[static_cast<std::size_t>(j)];
            consider(h, mix({{kOne - wj, dirac(i)}, {wj, dirac(j)}}));
        }
    }
    return best;
}

}  // namespace

Certificate certify_lotto(const FiniteDist& x, const FiniteDist& y) {
    const int limit = std::max(x.max_support(), y.max_support()) + 2;
    const Rational h0 = h_value(x, y);

    LottoSide side1 = lotto_best(x, y, h0, limit);
    LottoSide side2 = lotto_best(y, x, -h0, limit);

    Certificate cert;
    cert.max_gain_p1 = side1.gain;
    cert.max_gain_p2 = side2.gain;
    cert.best_deviation_p1 = side1.deviation;
    cert.best_deviation_p2 = side2.deviation;
    cert.truncation_bound = limit;
    cert.is_equilibrium = side1.gain.is_zero() && side2.gain.is_zero();
    return cert;
}

bool cross_check(const Valuations& v, const EqParams& pa, const EqParams& pb) {
    Profile a = build_equilibrium(v, pa);
    Profile b = build_equilibrium(v, pb);
    return certify_allpay(v, a.x, b.y).is_equilibrium && certify_allpay(v, b.x, a.y).is_equilibrium;
}

std::string certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["is_equilibrium"] = c.is_equilibrium;
    j["max_gain_p1"] = c.max_gain_p1.str();
    j["max_gain_p2"] = c.max_gain_p2.str();
    auto dist_json = [](const FiniteDist& d) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [bid, p] : d.weights()) arr.push_back({bid, p.str()});
        return arr;
    };
    j["best_deviation_p1"] = dist_json(c.best_deviation_p1);
    j["best_deviation_p2"] = dist_json(c.best_deviation_p2);
    j["truncation_bound"] = c.truncation_bound;
    return j.dump(2);
}

}  // namespace allpay
