#pragma once

#include "allpay/dist.hpp"
#include "allpay/rational.hpp"

namespace allpay {

// Zero-sum ranking payoff Pr(X > Y) - Pr(X < Y). Computed by the definitional
// double sum and re-derived through the tail-sum series; disagreement between
// the two routes throws std::logic_error.
Rational h_value(const FiniteDist& x, const FiniteDist& y);

// Expected all-pay payoff v*Pr(X > Y) + (v/2)*Pr(X = Y) - E(X) for prize
// value v > 0. Cross-checked against the h_value form; disagreement throws
// std::logic_error. Throws invalid_valuation_error when v <= 0.
Rational allpay_payoff(const Rational& v, const FiniteDist& x, const FiniteDist& y);

// Strategy families with a closed-form lower bound on h_value against any
// opponent. Each kind names the fixed first argument ("block") of the bound.
class BoundKind {
public:
    enum class Family {
        UniformOdd,    // uniform_odd(m)
        UniformEven,   // uniform_even(m)
        WSmoothed,     // w_dist(j, m)
        OddShift,      // uniform_odd_shift(m)
        VSmoothed,     // v_dist(j, m)
        OddOddMix,     // (1-a) uniform_odd(m) + a uniform_odd(m+1)
        EvenOddMix,    // (1-a) uniform_even(m) + a uniform_odd(m+1)
        VOddMix,       // a*d v_dist(j,m) + (1-a*d) uniform_odd(m),   d = (2m+1)/(m+1)
        VEvenMix,      // a*d v_dist(j,m) + (1-a*d) uniform_even(m),  d = (2m+1)/(m+1)
        VOddUpMix,     // (1-a)*s v_dist(j,m) + (1-(1-a)*s) uniform_odd(m+1), s = (2m+1)/m
    };

    static BoundKind uniform_odd(int m);
    static BoundKind uniform_even(int m);
    static BoundKind w_smoothed(int j, int m);
    static BoundKind odd_shift(int m);
    static BoundKind v_smoothed(int j, int m);
    static BoundKind odd_odd_mix(int m, Rational alpha);
    static BoundKind even_odd_mix(int m, Rational alpha);
    static BoundKind v_odd_mix(int j, int m, Rational alpha);
    static BoundKind v_even_mix(int j, int m, Rational alpha);
    static BoundKind v_odd_up_mix(int j, int m, Rational alpha);

    Family family() const { return family_; }
    int m() const { return m_; }
    int j() const { return j_; }
    const Rational& alpha() const { return alpha_; }

    // The distribution the bound applies to.
    FiniteDist block() const;

    std::string name() const;

private:
    BoundKind(Family f, int j, int m, Rational alpha);
    Family family_;
    int j_;
    int m_;
    Rational alpha_;
};

struct HBound {
    Rational bound;
    bool tight;  // h_value(block, y) == bound exactly when true
};

// Evaluates the kind's lower bound at E(y) and the relevant point
// probabilities of y. Contract: h_value(kind.block(), y) >= bound, with
// equality iff tight. Tightness comes from the opponent-tail conditions of
// the block's components, never from comparing values.
HBound h_lower_bound(const BoundKind& kind, const FiniteDist& y);

}  // namespace allpay
