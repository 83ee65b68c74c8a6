#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "allpay/dist.hpp"
#include "allpay/rational.hpp"

namespace allpay {

// Prize valuations with the convention v1 >= v2 > 0 (player 2 is the weaker
// player). Constructing anything else throws invalid_valuation_error; callers
// that want automatic role swapping do it explicitly.
struct Valuations {
    Valuations(Rational v1_, Rational v2_);
    Rational v1, v2;
};

// Which characterisation branch governs a valuation pair. Exactly one tag
// applies to every valid pair; all comparisons are exact.
enum class CaseTag {
    IntSym,          // v2/2 integer, v1 == v2
    IntV2Eq2,        // v2 == 2 < v1
    IntV2Ge4,        // v2 even, 4 <= v2 < v1
    NonIntEqFloor,   // v2 > 2 non-even, floor(v1/2) == floor(v2/2)
    NonIntBoundary,  // v2 > 2 non-even, v1/2 == floor(v2/2) + 1
    NonIntFar,       // v2 > 2 non-even, v1/2 > floor(v2/2) + 1
    SmallGt,         // v2 < 2, v1 > 2
    SmallEq,         // v2 < 2, v1 == 2
    SmallLt,         // v2 < 2, v1 < 2
};

std::string_view case_name(CaseTag tag);      // "Int_Sym", "NonInt_Far", ...
CaseTag case_from_name(std::string_view name);

CaseTag classify(const Valuations& v);

// Free parameters of an equilibrium family, one record per case shape.

// IntSym: both players mix odd-uniform(m+1) against even-uniform(m).
struct SymParams {
    Rational alpha, beta;  // each in [0,1]
    bool operator==(const SymParams&) const = default;
};

// IntV2Eq2: weaker player's mean b and her odd-vs-even split lambda.
struct V2Eq2Params {
    Rational b, lambda;
    bool operator==(const V2Eq2Params&) const = default;
};

// IntV2Ge4: weaker player's mean b plus convex weights over her blocks.
struct V2Ge4Params {
    Rational b;
    Rational lambda_odd, lambda_even, lambda_shift;
    std::vector<Rational> lambda_w;  // weight on w_dist(j, m), j = 1..m-1
    bool operator==(const V2Ge4Params&) const = default;
};

// Cases with a unique equilibrium: NonIntEqFloor, SmallGt, SmallLt.
struct UniqueParams {
    bool operator==(const UniqueParams&) const = default;
};

// NonIntBoundary: stronger player's mean excess alpha plus convex weights
// over his blocks. kappa_v must be all zero on the upper alpha branch.
struct BoundaryParams {
    Rational alpha;
    Rational lambda_odd, lambda_even;
    std::vector<Rational> lambda_v, kappa_v;  // length m each
    bool operator==(const BoundaryParams&) const = default;
};

// NonIntFar: convex weights over the stronger player's m+1 generators.
struct FarParams {
    Rational weight_u;                // on the odd-odd mixture generator
    std::vector<Rational> weight_x;   // on the v_dist-based generators, j = 1..m
    bool operator==(const FarParams&) const = default;
};

// SmallEq: probability alpha of bidding 1 instead of 0.
struct SmallEqParams {
    Rational alpha;
    bool operator==(const SmallEqParams&) const = default;
};

using EqParams = std::variant<SymParams, V2Eq2Params, V2Ge4Params, UniqueParams,
                              BoundaryParams, FarParams, SmallEqParams>;

// Closed or half-open rational interval.
struct Interval {
    Rational lo, hi;
    bool lo_open = false, hi_open = false;
};

// Symbolic description of a case's free-parameter region: interval bounds for
// the scalar parameters plus the linear constraints tying the rest together.
struct ParamSpace {
    CaseTag tag;
    std::vector<std::pair<std::string, Interval>> scalars;
    std::vector<std::string> constraints;
};

ParamSpace param_space(const Valuations& v);

// Throws constraint_violation_error naming the violated constraint if p does
// not lie in param_space(v). Also rejects records of the wrong case shape.
void validate_params(const Valuations& v, const EqParams& p);

// Deterministic feasible parameter point per case.
EqParams canonical_params(const Valuations& v);

// Deterministic list of feasible points covering the region's vertices and a
// midpoint; at least five for every case with a nontrivial region.
std::vector<EqParams> sample_params(const Valuations& v);

// Exact equilibrium payoffs (P1, P2) predicted by the governing case formula
// for a feasible parameter point.
std::pair<Rational, Rational> predicted_payoffs(const Valuations& v, const EqParams& p);

struct Profile {
    FiniteDist x = dirac(0);
    FiniteDist y = dirac(0);
    CaseTag tag = CaseTag::SmallLt;
    Rational predicted_p1, predicted_p2;
};

// Assembles the strategy profile prescribed for (v, p); p is validated first.
Profile build_equilibrium(const Valuations& v, const EqParams& p);

struct PayoffRange {
    Interval p1, p2;  // closed [min, max] over the feasible region
};

// Ranges computed from the closed-form payoff expressions, which are affine
// in the scalar parameter of each case; degenerate when payoffs are unique.
PayoffRange payoff_range(const Valuations& v);

// JSON object {"case", "v1", "v2", "params", "x", "y", "p1", "p2"}; appends
// "p1_range"/"p2_range" when a range is supplied and "param_space" when one
// is supplied.
std::string profile_to_json(const Valuations& v, const EqParams& p, const Profile& profile,
                            const PayoffRange* range = nullptr, const ParamSpace* space = nullptr);

// Parses the CLI's params JSON object for the case governing v. Scalar keys
// are required; vector keys may be omitted (all zeros) but must be dense and
// of the right length when present.
EqParams params_from_json(const Valuations& v, const std::string& text);

}  // namespace allpay
