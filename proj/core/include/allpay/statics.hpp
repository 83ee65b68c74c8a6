#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "allpay/equilibria.hpp"
#include "allpay/rational.hpp"

namespace allpay {

// Continuous-bid benchmark payoffs: the stronger player earns the valuation
// gap, the weaker earns zero. Roles are decided by comparison, so the pair
// works for either argument order. Throws invalid_valuation_error on
// nonpositive values.
std::pair<Rational, Rational> continuous_payoffs(const Rational& v1, const Rational& v2);

// Player 2's discrete-equilibrium payoff minus the continuous benchmark, as
// a closed interval (degenerate whenever the discrete payoff is unique).
// Roles are swapped internally when v2 > v1. For non-even v1 the interval is
// always degenerate and is checked against the piecewise closed form;
// disagreement throws std::logic_error.
struct DiffInterval {
    Rational lo, hi;
};
DiffInterval payoff_difference(const Rational& v1, const Rational& v2);

// The piecewise closed form of player 2's payoff difference as v2 grows with
// v1 fixed and not an even integer. Branch edges use <= on the left.
Rational closed_form_difference(const Rational& v1, const Rational& v2);

struct SweepRow {
    Rational v2;
    Rational disc_p2_min, disc_p2_max;
    Rational cont_p2;
    Rational diff_min, diff_max;
    CaseTag tag;          // governing case, after any role swap
    bool roles_swapped;   // true when v2 > v1
};

// One row per v2 in the arithmetic progression v2_min, v2_min+step, ...,
// including v2_max when the progression hits it exactly.
std::vector<SweepRow> sweep(const Rational& v1, const Rational& v2_min, const Rational& v2_max,
                            const Rational& step);

// CSV with header v2,disc_p2_min,disc_p2_max,cont_p2,diff_min,diff_max,case,
// roles_swapped. Rationals render as p/q; decimal_digits >= 0 switches the
// numeric columns to fixed-point approximations (display only).
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, int decimal_digits = -1);

}  // namespace allpay
