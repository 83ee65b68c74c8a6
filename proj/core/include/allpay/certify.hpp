#pragma once

#include <string>
#include <vector>

#include "allpay/dist.hpp"
#include "allpay/equilibria.hpp"
#include "allpay/rational.hpp"

namespace allpay {

struct BestResponse {
    Rational value;           // maximal pure-bid payoff
    std::vector<int> argmax;  // every maximising bid, ascending
};

// Evaluates the pure-bid payoff v*Pr(k > opp) + (v/2)*Pr(k = opp) - k for
// every k in 0..max_support(opp)+1. Bidding above that range wins surely at
// strictly higher cost, so it is dominated and never enumerated.
BestResponse best_response(const Rational& v, const FiniteDist& opponent);

// Exact best-response verification result for a profile.
struct Certificate {
    bool is_equilibrium = false;  // both gains exactly zero
    Rational max_gain_p1, max_gain_p2;
    FiniteDist best_deviation_p1 = dirac(0);  // a witnessing best reply
    FiniteDist best_deviation_p2 = dirac(0);
    int truncation_bound = 0;  // bids enumerated up to this level
};

// Certifies (x, y) as a mixed equilibrium of the all-pay auction by pure-bid
// enumeration; mixed deviations reduce to pure ones by payoff linearity.
// Also checks that each player's support lies inside their best-response
// argmax, which must agree with the zero-gain test.
Certificate certify_allpay(const Valuations& v, const FiniteDist& x, const FiniteDist& y);

// Certifies (x, y) as an equilibrium of the zero-sum fixed-mean game: no
// deviation with the same expectation may improve h_value. The feasible set's
// extreme points are one-point (integer mean) and two-point distributions, so
// enumerating those over 0..N with N = max(both supports)+2 is exhaustive.
Certificate certify_lotto(const FiniteDist& x, const FiniteDist& y);

// Builds the profiles for two feasible parameter points and certifies both
// cross pairings (x_a, y_b) and (x_b, y_a).
bool cross_check(const Valuations& v, const EqParams& pa, const EqParams& pb);

// JSON object with exact rational strings.
std::string certificate_to_json(const Certificate& c);

}  // namespace allpay
