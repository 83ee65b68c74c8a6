#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "allpay/rational.hpp"

namespace allpay {

// Finitely supported probability distribution on nonnegative integer bids.
// Invariants: every stored weight is strictly positive, the weights sum to
// exactly one, and support is kept sorted ascending. Values are immutable
// after construction, so sharing across threads is safe.
class FiniteDist {
public:
    using Weights = std::vector<std::pair<int, Rational>>;

    // Merges duplicate bids, drops nothing, then validates the invariants.
    // Throws invalid_parameter_error on a negative bid or nonpositive weight,
    // invalid_mixture_error when the total mass is not exactly one.
    static FiniteDist from_weights(Weights w);

    const Weights& weights() const { return w_; }
    std::size_t support_size() const { return w_.size(); }
    int min_support() const { return w_.front().first; }
    int max_support() const { return w_.back().first; }

    Rational prob(int k) const;  // Pr(X = k), zero off support
    Rational tail(int k) const;  // Pr(X >= k)
    Rational expectation() const;

    bool operator==(const FiniteDist&) const = default;

private:
    FiniteDist() = default;
    Weights w_;
};

FiniteDist dirac(int k);

// Uniform on the m odd bids {1, 3, ..., 2m-1}; mean m. Requires m >= 1.
FiniteDist uniform_odd(int m);

// Uniform on the m+1 even bids {0, 2, ..., 2m}; mean m. Requires m >= 0.
FiniteDist uniform_even(int m);

// Uniform on the m-1 even bids {2, 4, ..., 2m-2}; mean m. Requires m >= 2
// (the support would be empty at m = 1, which we reject).
FiniteDist uniform_odd_shift(int m);

// uniform_odd(m) smoothed over bids 0..2j: half weight at 0 and 2j, full
// weight on interior even bids, untouched odd tail. Mean m. Requires m >= 2
// and 1 <= j <= m-1.
FiniteDist w_dist(int j, int m);

// uniform_even(m) analogue smoothed over bids 0..2j-1, renormalised to
// denominator 2m+1. Mean m + (m+1)/(2m+1). Requires m >= 1 and 1 <= j <= m.
FiniteDist v_dist(int j, int m);

// Convex combination. Weights must be nonnegative and sum to exactly one;
// zero-weight parts are dropped so boundary parameters produce canonical
// results. Throws invalid_mixture_error otherwise.
FiniteDist mix(const std::vector<std::pair<Rational, FiniteDist>>& parts);

Rational expectation(const FiniteDist& d);
Rational tail_prob(const FiniteDist& d, int k);

// JSON wire format: [[bid, "p/q"], ...] ascending by bid, probabilities in
// lowest terms.
std::string dist_to_json(const FiniteDist& d);
FiniteDist dist_from_json(const std::string& text);

}  // namespace allpay
