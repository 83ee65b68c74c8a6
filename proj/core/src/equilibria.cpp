#include "allpay/equilibria.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "allpay/errors.hpp"

namespace allpay {

namespace {

using ordered_json = nlohmann::ordered_json;

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

Rational half(const Rational& v) { return v / 2; }

void require(bool ok, const char* constraint) {
    if (!ok) throw constraint_violation_error(constraint);
}

void require_nonneg(const std::vector<Rational>& w, const char* constraint) {
    for (const auto& x : w) require(x >= kZero, constraint);
}

Rational sum(const std::vector<Rational>& w) {
    Rational s;
    for (const auto& x : w) s += x;
    return s;
}

// Shared context for the two cases built on mean-(m + alpha) strategies.
struct ShiftCtx {
    int m;              // floor(v2/2)
    Rational delta;     // (2m+1)/(m+1), scale of the v-block on the low alpha branch
    Rational sigma;     // (2m+1)/m, scale of the v-block on the high alpha branch
    Rational alpha_max; // (m+1)(v2/2 - m)/(v2/2)
};

ShiftCtx shift_ctx(const Valuations& v) {
    ShiftCtx c;
    Rational h2 = half(v.v2);
    c.m = h2.floor_int();
    c.delta = Rational(2 * c.m + 1, c.m + 1);
    c.sigma = Rational(2 * c.m + 1, c.m);
    c.alpha_max = Rational(c.m + 1) * (h2 - Rational(c.m)) / h2;
    return c;
}

// Generators of the stronger player's family when E(X) = m + alpha.
FiniteDist gen_odd_pair(int m, const Rational& a) {
    return mix({{kOne - a, uniform_odd(m)}, {a, uniform_odd(m + 1)}});
}

FiniteDist gen_even_odd(int m, const Rational& a) {
    return mix({{kOne - a, uniform_even(m)}, {a, uniform_odd(m + 1)}});
}

FiniteDist gen_v_low(int j, const ShiftCtx& c, const Rational& a) {
    Rational w = a * c.delta;
    return mix({{w, v_dist(j, c.m)}, {kOne - w, uniform_odd(c.m)}});
}

FiniteDist gen_v_even(int j, const ShiftCtx& c, const Rational& a) {
    Rational w = a * c.delta;
    return mix({{w, v_dist(j, c.m)}, {kOne - w, uniform_even(c.m)}});
}

FiniteDist gen_v_high(int j, const ShiftCtx& c, const Rational& a) {
    Rational w = (kOne - a) * c.sigma;
    return mix({{w, v_dist(j, c.m)}, {kOne - w, uniform_odd(c.m + 1)}});
}

// alpha <= 1/delta picks the low branch; the far case fixes alpha so that
// this is equivalent to v2/2 <= m + 1/2.
bool low_branch(const ShiftCtx& c, const Rational& a) { return a * c.delta <= kOne; }

struct V2Eq2Window {
    Rational lo, hi;  // feasible lambda range for a given b
};

V2Eq2Window v2eq2_window(const Valuations& v, const Rational& b) {
    Rational base = Rational(4) / (b * v.v1);
    return {max(kZero, base - Rational(2) / b + kOne), min(kOne, base - kOne)};
}

struct V2Ge4Ctx {
    int m;
    Rational b_lo, b_hi;
};

V2Ge4Ctx v2ge4_ctx(const Valuations& v) {
    V2Ge4Ctx c;
    c.m = half(v.v2).floor_int();
    c.b_lo = v.v2 * (v.v2 - 2) / (2 * v.v1);
    c.b_hi = min(Rational(c.m), v.v2 * (v.v2 + 2) / (2 * v.v1));
    return c;
}

// Right side of the shift/even balance equality for a given b.
Rational v2ge4_balance(const Valuations& v, const Rational& b) {
    return v.v2 * v.v2 / (2 * v.v1 * b) - kOne;
}

// Lower bound on lambda_odd for a given b.
Rational v2ge4_odd_floor(const Valuations& v, const Rational& b) {
    return v.v2 / (2 * b) * (v.v2 * (v.v2 + 2) / (2 * v.v1) + b - v.v2);
}

// Required value of lambda_even + sum(kappa)*(1-alpha*delta)/(1-alpha).
Rational boundary_even_share(const ShiftCtx& c, const Rational& a) {
    return (c.alpha_max - a) / (kOne - a);
}

const char* kShapeMismatch = "parameter record does not match the case governing these valuations";

}  // namespace

Valuations::Valuations(Rational v1_, Rational v2_) : v1(std::move(v1_)), v2(std::move(v2_)) {
    if (v2.sign() <= 0) throw invalid_valuation_error("valuations must be positive");
    if (v1 < v2)
        throw invalid_valuation_error("v1 < v2: player 1 must be the stronger player (swap the roles)");
}

std::string_view case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::IntSym: return "Int_Sym";
        case CaseTag::IntV2Eq2: return "Int_V2Eq2";
        case CaseTag::IntV2Ge4: return "Int_V2Ge4";
        case CaseTag::NonIntEqFloor: return "NonInt_EqFloor";
        case CaseTag::NonIntBoundary: return "NonInt_Boundary";
        case CaseTag::NonIntFar: return "NonInt_Far";
        case CaseTag::SmallGt: return "Small_Gt";
        case CaseTag::SmallEq: return "Small_Eq";
        case CaseTag::SmallLt: return "Small_Lt";
    }
    throw std::logic_error("case_name: unknown tag");
}

CaseTag case_from_name(std::string_view name) {
    for (CaseTag t : {CaseTag::IntSym, CaseTag::IntV2Eq2, CaseTag::IntV2Ge4, CaseTag::NonIntEqFloor,
                      CaseTag::NonIntBoundary, CaseTag::NonIntFar, CaseTag::SmallGt, CaseTag::SmallEq,
                      CaseTag::SmallLt})
        if (case_name(t) == name) return t;
    throw std::invalid_argument("unknown case name: " + std::string(name));
}

CaseTag classify(const Valuations& v) {
    if (v.v2 < Rational(2)) {
        Rational h1 = half(v.v1);
        if (h1 > kOne) return CaseTag::SmallGt;
        if (h1 == kOne) return CaseTag::SmallEq;
        return CaseTag::SmallLt;
    }
    if (half(v.v2).is_integer()) {
        if (v.v1 == v.v2) return CaseTag::IntSym;
        if (v.v2 == Rational(2)) return CaseTag::IntV2Eq2;
        return CaseTag::IntV2Ge4;
    }
    Rational h1 = half(v.v1);
    Rational fl2 = half(v.v2).floor();
    if (h1.floor() == fl2) return CaseTag::NonIntEqFloor;
    if (h1 == fl2 + kOne) return CaseTag::NonIntBoundary;
    return CaseTag::NonIntFar;
}

ParamSpace param_space(const Valuations& v) {
    ParamSpace s;
    s.tag = classify(v);
    switch (s.tag) {
        case CaseTag::IntSym:
            s.scalars = {{"alpha", {kZero, kOne}}, {"beta", {kZero, kOne}}};
            break;
        case CaseTag::IntV2Eq2:
            s.scalars = {{"b", {kZero, min(kOne, Rational(4) / v.v1), true, false}}};
            s.constraints = {"max(0, 4/(b*v1) - 2/b + 1) <= lambda <= min(1, 4/(b*v1) - 1)"};
            break;
        case CaseTag::IntV2Ge4: {
            auto c = v2ge4_ctx(v);
            s.scalars = {{"b", {c.b_lo, c.b_hi}}};
            s.constraints = {
                "lambda_odd + lambda_even + lambda_shift + sum(lambda_w) = 1, all >= 0",
                "lambda_shift/(m-1) - lambda_even/(m+1) = v2^2/(2*v1*b) - 1",
                "lambda_odd >= (v2/(2*b)) * (v2*(v2+2)/(2*v1) + b - v2)",
            };
            break;
        }
        case CaseTag::NonIntEqFloor:
            s.constraints = {"unique equilibrium: no free parameters"};
            break;
        case CaseTag::NonIntBoundary: {
            auto c = shift_ctx(v);
            s.scalars = {{"alpha", {kZero, c.alpha_max}}};
            s.constraints = {
                "lambda_odd + lambda_even + sum(lambda_v) + sum(kappa_v) = 1, all >= 0",
                "R(alpha) = (alpha_max - alpha)/(1 - alpha) with alpha_max = (m+1)(v2/2 - m)/(v2/2)",
                "alpha <= (m+1)/(2m+1): lambda_even + sum(kappa_v)*(1 - alpha*(2m+1)/(m+1))/(1 - alpha) = R(alpha)",
                "alpha >  (m+1)/(2m+1): kappa_v = 0 and lambda_even = R(alpha)",
            };
            break;
        }
        case CaseTag::NonIntFar:
            s.constraints = {"weight_u + sum(weight_x) = 1, all >= 0"};
            break;
        case CaseTag::SmallEq:
            s.scalars = {{"alpha", {kZero, kOne}}};
            break;
        case CaseTag::SmallGt:
        case CaseTag::SmallLt:
            s.constraints = {"unique equilibrium: no free parameters"};
            break;
    }
    return s;
}

void validate_params(const Valuations& v, const EqParams& p) {
    CaseTag tag = classify(v);
    switch (tag) {
        case CaseTag::IntSym: {
            const auto* q = std::get_if<SymParams>(&p);
            require(q != nullptr, kShapeMismatch);
            require(q->alpha >= kZero && q->alpha <= kOne, "alpha must lie in [0, 1]");
            require(q->beta >= kZero && q->beta <= kOne, "beta must lie in [0, 1]");
            return;
        }
        case CaseTag::IntV2Eq2: {
            const auto* q = std::get_if<V2Eq2Params>(&p);
            require(q != nullptr, kShapeMismatch);
            require(q->b > kZero && q->b <= kOne, "b must lie in (0, 1]");
            auto win = v2eq2_window(v, q->b);
            require(win.lo <= win.hi, "lambda window is empty: need b <= 4/v1");
            require(q->lambda >= win.lo && q->lambda <= win.hi,
                    "lambda outside [max(0, 4/(b*v1) - 2/b + 1), min(1, 4/(b*v1) - 1)]");
            return;
        }
        case CaseTag::IntV2Ge4: {
            const auto* q = std::get_if<V2Ge4Params>(&p);
            require(q != nullptr, kShapeMismatch);
            auto c = v2ge4_ctx(v);
            require(static_cast<int>(q->lambda_w.size()) == c.m - 1, "lambda_w must have exactly m-1 entries");
            require(q->b >= c.b_lo && q->b <= c.b_hi, "b outside [v2(v2-2)/(2*v1), min(m, v2(v2+2)/(2*v1))]");
            require(q->lambda_odd >= kZero && q->lambda_even >= kZero && q->lambda_shift >= kZero,
                    "block weights must be nonnegative");
            require_nonneg(q->lambda_w, "block weights must be nonnegative");
            require(q->lambda_odd + q->lambda_even + q->lambda_shift + sum(q->lambda_w) == kOne,
                    "block weights must sum to exactly 1");
            require(q->lambda_shift / (c.m - 1) - q->lambda_even / (c.m + 1) == v2ge4_balance(v, q->b),
                    "lambda_shift/(m-1) - lambda_even/(m+1) must equal v2^2/(2*v1*b) - 1");
            require(q->lambda_odd >= v2ge4_odd_floor(v, q->b),
                    "lambda_odd below (v2/(2*b)) * (v2*(v2+2)/(2*v1) + b - v2)");
            return;
        }
        case CaseTag::NonIntEqFloor: {
            require(std::holds_alternative<UniqueParams>(p), kShapeMismatch);
            return;
        }
        case CaseTag::NonIntBoundary: {
            const auto* q = std::get_if<BoundaryParams>(&p);
            require(q != nullptr, kShapeMismatch);
            auto c = shift_ctx(v);
            require(static_cast<int>(q->lambda_v.size()) == c.m, "lambda_v must have exactly m entries");
            require(static_cast<int>(q->kappa_v.size()) == c.m, "kappa_v must have exactly m entries");
            require(q->alpha >= kZero && q->alpha <= c.alpha_max,
                    "alpha outside [0, (m+1)(v2/2 - m)/(v2/2)]");
            require(q->lambda_odd >= kZero && q->lambda_even >= kZero, "block weights must be nonnegative");
            require_nonneg(q->lambda_v, "block weights must be nonnegative");
            require_nonneg(q->kappa_v, "block weights must be nonnegative");
            require(q->lambda_odd + q->lambda_even + sum(q->lambda_v) + sum(q->kappa_v) == kOne,
                    "block weights must sum to exactly 1");
            Rational share = boundary_even_share(c, q->alpha);
            if (low_branch(c, q->alpha)) {
                Rational scale = (kOne - q->alpha * c.delta) / (kOne - q->alpha);
                require(q->lambda_even + sum(q->kappa_v) * scale == share,
                        "lambda_even + sum(kappa_v)*(1-alpha*delta)/(1-alpha) must equal (alpha_max - alpha)/(1 - alpha)");
            } else {
                require(sum(q->kappa_v).is_zero(), "kappa_v must be zero when alpha > (m+1)/(2m+1)");
                require(q->lambda_even == share,
                        "lambda_even must equal (alpha_max - alpha)/(1 - alpha)");
            }
            return;
        }
        case CaseTag::NonIntFar: {
            const auto* q = std::get_if<FarParams>(&p);
            require(q != nullptr, kShapeMismatch);
            auto c = shift_ctx(v);
            require(static_cast<int>(q->weight_x.size()) == c.m, "weight_x must have exactly m entries");
            require(q->weight_u >= kZero, "generator weights must be nonnegative");
            require_nonneg(q->weight_x, "generator weights must be nonnegative");
            require(q->weight_u + sum(q->weight_x) == kOne, "generator weights must sum to exactly 1");
            return;
        }
        case CaseTag::SmallGt:
        case CaseTag::SmallLt: {
            require(std::holds_alternative<UniqueParams>(p), kShapeMismatch);
            return;
        }
        case CaseTag::SmallEq: {
            const auto* q = std::get_if<SmallEqParams>(&p);
            require(q != nullptr, kShapeMismatch);
            require(q->alpha >= kZero && q->alpha <= kOne, "alpha must lie in [0, 1]");
            return;
        }
    }
    throw std::logic_error("validate_params: unknown case");
}

EqParams canonical_params(const Valuations& v) {
    switch (classify(v)) {
        case CaseTag::IntSym:
            return SymParams{kZero, kZero};
        case CaseTag::IntV2Eq2:
            return V2Eq2Params{Rational(2) / v.v1, kOne};
        case CaseTag::IntV2Ge4: {
            auto c = v2ge4_ctx(v);
            return V2Ge4Params{v.v2 * v.v2 / (2 * v.v1), kOne, kZero, kZero,
                               std::vector<Rational>(static_cast<std::size_t>(c.m - 1), kZero)};
        }
        case CaseTag::NonIntEqFloor:
            return UniqueParams{};
        case CaseTag::NonIntBoundary: {
            auto c = shift_ctx(v);
            Rational le = boundary_even_share(c, kZero);
            return BoundaryParams{kZero, kOne - le, le,
                                  std::vector<Rational>(static_cast<std::size_t>(c.m), kZero),
                                  std::vector<Rational>(static_cast<std::size_t>(c.m), kZero)};
        }
        case CaseTag::NonIntFar: {
            auto c = shift_ctx(v);
            return FarParams{kOne, std::vector<Rational>(static_cast<std::size_t>(c.m), kZero)};
        }
        case CaseTag::SmallGt:
        case CaseTag::SmallLt:
            return UniqueParams{};
        case CaseTag::SmallEq:
            return SmallEqParams{kOne};
    }
    throw std::logic_error("canonical_params: unknown case");
}

std::vector<EqParams> sample_params(const Valuations& v) {
    std::vector<EqParams> out;
    auto push = [&](EqParams p) {
        validate_params(v, p);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    switch (classify(v)) {
        case CaseTag::IntSym: {
            const std::pair<Rational, Rational> corners[] = {
                {kZero, kZero}, {kZero, kOne}, {kOne, kZero}, {kOne, kOne}, {kHalf, kHalf}};
            for (const auto& [a, b] : corners) push(SymParams{a, b});
            break;
        }
        case CaseTag::IntV2Eq2: {
            Rational b_hi = min(kOne, Rational(4) / v.v1);
            for (const Rational& b : {b_hi, Rational(2) / v.v1, b_hi / 2, b_hi / 4}) {
                auto win = v2eq2_window(v, b);
                push(V2Eq2Params{b, win.lo});
                push(V2Eq2Params{b, win.hi});
                push(V2Eq2Params{b, (win.lo + win.hi) / 2});
            }
            break;
        }
        case CaseTag::IntV2Ge4: {
            auto c = v2ge4_ctx(v);
            Rational b_can = v.v2 * v.v2 / (2 * v.v1);
            for (const Rational& b : {c.b_lo, (c.b_lo + c.b_hi) / 2, c.b_hi, b_can}) {
                Rational r = v2ge4_balance(v, b);
                Rational shift0 = r >= kZero ? Rational(c.m - 1) * r : kZero;
                Rational even0 = r >= kZero ? kZero : -Rational(c.m + 1) * r;
                Rational odd_max = kOne - shift0 - even0;
                std::vector<Rational> zeros(static_cast<std::size_t>(c.m - 1), kZero);
                push(V2Ge4Params{b, odd_max, even0, shift0, zeros});
                Rational slack = odd_max - max(kZero, v2ge4_odd_floor(v, b));
                if (slack > kZero) {
                    std::vector<Rational> spread(static_cast<std::size_t>(c.m - 1), slack / (c.m - 1));
                    push(V2Ge4Params{b, odd_max - slack, even0, shift0, spread});
                    std::vector<Rational> half_spread(static_cast<std::size_t>(c.m - 1),
                                                      slack / (2 * (c.m - 1)));
                    push(V2Ge4Params{b, odd_max - slack / 2, even0, shift0, half_spread});
                }
            }
            break;
        }
        case CaseTag::NonIntBoundary: {
            auto c = shift_ctx(v);
            std::vector<Rational> zeros(static_cast<std::size_t>(c.m), kZero);
            for (const Rational& a : {kZero, c.alpha_max / 4, c.alpha_max / 2,
                                      c.alpha_max * Rational(3, 4), c.alpha_max}) {
                Rational share = boundary_even_share(c, a);
                push(BoundaryParams{a, kOne - share, share, zeros, zeros});
                auto lv = zeros;
                lv[0] = kOne - share;
                push(BoundaryParams{a, kZero, share, lv, zeros});
                if (low_branch(c, a)) {
                    Rational scale = (kOne - a * c.delta) / (kOne - a);
                    if (scale > kZero && share / scale <= kOne) {
                        auto kv = zeros;
                        kv[0] = share / scale;
                        push(BoundaryParams{a, kOne - share / scale, kZero, zeros, kv});
                    }
                }
            }
            break;
        }
        case CaseTag::NonIntFar: {
            auto c = shift_ctx(v);
            std::vector<Rational> zeros(static_cast<std::size_t>(c.m), kZero);
            push(FarParams{kOne, zeros});
            auto x1 = zeros;
            x1[0] = kOne;
            push(FarParams{kZero, x1});
            auto x1h = zeros;
            x1h[0] = kHalf;
            push(FarParams{kHalf, x1h});
            auto xm = zeros;
            xm[static_cast<std::size_t>(c.m - 1)] = Rational(3, 4);
            push(FarParams{Rational(1, 4), xm});
            auto x1q = zeros;
            x1q[0] = Rational(1, 4);
            push(FarParams{Rational(3, 4), x1q});
            std::vector<Rational> uni(static_cast<std::size_t>(c.m), Rational(1, 2 * c.m));
            push(FarParams{kHalf, uni});
            break;
        }
        case CaseTag::SmallEq: {
            for (const Rational& a : {kZero, Rational(1, 4), kHalf, Rational(3, 4), kOne})
                push(SmallEqParams{a});
            break;
        }
        case CaseTag::NonIntEqFloor:
        case CaseTag::SmallGt:
        case CaseTag::SmallLt:
            push(UniqueParams{});
            break;
    }
    return out;
}

std::pair<Rational, Rational> predicted_payoffs(const Valuations& v, const EqParams& p) {
    validate_params(v, p);
    switch (classify(v)) {
        case CaseTag::IntSym: {
            const auto& q = std::get<SymParams>(p);
            return {kOne - q.beta, kOne - q.alpha};
        }
        case CaseTag::IntV2Eq2: {
            const auto& q = std::get<V2Eq2Params>(p);
            return {v.v1 - q.b * v.v1 / 2 - kOne, kZero};
        }
        case CaseTag::IntV2Ge4: {
            const auto& q = std::get<V2Ge4Params>(p);
            return {v.v1 - q.b * v.v1 / v.v2 - half(v.v2), kZero};
        }
        case CaseTag::NonIntEqFloor: {
            Rational m = half(v.v2).floor();
            return {half(v.v1) - m, half(v.v2) - m};
        }
        case CaseTag::NonIntBoundary: {
            const auto& q = std::get<BoundaryParams>(p);
            Rational m = half(v.v2).floor();
            return {kOne, half(v.v2) - m - v.v2 / v.v1 * q.alpha};
        }
        case CaseTag::NonIntFar:
            return {v.v1 + kOne - 2 * half(v.v2).ceil(), kZero};
        case CaseTag::SmallGt:
            return {v.v1 - kOne, kZero};
        case CaseTag::SmallEq: {
            const auto& q = std::get<SmallEqParams>(p);
            return {kOne, (kOne - q.alpha) * half(v.v2)};
        }
        case CaseTag::SmallLt:
            return {half(v.v1), half(v.v2)};
    }
    throw std::logic_error("predicted_payoffs: unknown case");
}

Profile build_equilibrium(const Valuations& v, const EqParams& p) {
    validate_params(v, p);
    CaseTag tag = classify(v);
    Profile out;
    out.tag = tag;
    switch (tag) {
        case CaseTag::IntSym: {
            const auto& q = std::get<SymParams>(p);
            int m = (half(v.v2) - kOne).floor_int();
            out.x = mix({{q.alpha, uniform_odd(m + 1)}, {kOne - q.alpha, uniform_even(m)}});
            out.y = mix({{q.beta, uniform_odd(m + 1)}, {kOne - q.beta, uniform_even(m)}});
            break;
        }
        case CaseTag::IntV2Eq2: {
            const auto& q = std::get<V2Eq2Params>(p);
            out.x = uniform_odd(1);
            out.y = mix({{kOne - q.b, dirac(0)},
                         {q.b * q.lambda, uniform_odd(1)},
                         {q.b * (kOne - q.lambda), uniform_even(1)}});
            break;
        }
        case CaseTag::IntV2Ge4: {
            const auto& q = std::get<V2Ge4Params>(p);
            auto c = v2ge4_ctx(v);
            Rational active = q.b / c.m;
            std::vector<std::pair<Rational, FiniteDist>> parts;
            parts.emplace_back(kOne - active, dirac(0));
            parts.emplace_back(active * q.lambda_odd, uniform_odd(c.m));
            parts.emplace_back(active * q.lambda_even, uniform_even(c.m));
            parts.emplace_back(active * q.lambda_shift, uniform_odd_shift(c.m));
            for (int j = 1; j <= c.m - 1; ++j)
                parts.emplace_back(active * q.lambda_w[static_cast<std::size_t>(j - 1)], w_dist(j, c.m));
            out.x = uniform_odd(c.m);
            out.y = mix(parts);
            break;
        }
        case CaseTag::NonIntEqFloor: {
            int m = half(v.v2).floor_int();
            Rational lambda = Rational(m) / half(v.v2) * (half(v.v2).ceil() - half(v.v2));
            Rational kappa = Rational(m) / half(v.v1) * (half(v.v1).ceil() - half(v.v1));
            out.x = mix({{lambda, uniform_odd(m)}, {kOne - lambda, uniform_even(m)}});
            out.y = mix({{kappa, uniform_odd(m)}, {kOne - kappa, uniform_even(m)}});
            break;
        }
        case CaseTag::NonIntBoundary: {
            const auto& q = std::get<BoundaryParams>(p);
            auto c = shift_ctx(v);
            std::vector<std::pair<Rational, FiniteDist>> parts;
            parts.emplace_back(q.lambda_odd, gen_odd_pair(c.m, q.alpha));
            parts.emplace_back(q.lambda_even, gen_even_odd(c.m, q.alpha));
            if (low_branch(c, q.alpha)) {
                for (int j = 1; j <= c.m; ++j) {
                    parts.emplace_back(q.lambda_v[static_cast<std::size_t>(j - 1)], gen_v_low(j, c, q.alpha));
                    parts.emplace_back(q.kappa_v[static_cast<std::size_t>(j - 1)], gen_v_even(j, c, q.alpha));
                }
            } else {
                for (int j = 1; j <= c.m; ++j)
                    parts.emplace_back(q.lambda_v[static_cast<std::size_t>(j - 1)], gen_v_high(j, c, q.alpha));
            }
            out.x = mix(parts);
            out.y = uniform_even(c.m);
            break;
        }
        case CaseTag::NonIntFar: {
            const auto& q = std::get<FarParams>(p);
            auto c = shift_ctx(v);
            Rational b = Rational(c.m) * Rational(c.m + 1) / half(v.v1);
            Rational alpha = c.alpha_max;
            std::vector<std::pair<Rational, FiniteDist>> parts;
            parts.emplace_back(q.weight_u, gen_odd_pair(c.m, alpha));
            bool low = half(v.v2) <= Rational(c.m) + kHalf;
            for (int j = 1; j <= c.m; ++j)
                parts.emplace_back(q.weight_x[static_cast<std::size_t>(j - 1)],
                                   low ? gen_v_low(j, c, alpha) : gen_v_high(j, c, alpha));
            out.x = mix(parts);
            out.y = mix({{kOne - b / c.m, dirac(0)}, {b / c.m, uniform_even(c.m)}});
            break;
        }
        case CaseTag::SmallGt:
            out.x = dirac(1);
            out.y = dirac(0);
            break;
        case CaseTag::SmallEq: {
            const auto& q = std::get<SmallEqParams>(p);
            out.x = mix({{kOne - q.alpha, dirac(0)}, {q.alpha, dirac(1)}});
            out.y = dirac(0);
            break;
        }
        case CaseTag::SmallLt:
            out.x = dirac(0);
            out.y = dirac(0);
            break;
    }
    auto [p1, p2] = predicted_payoffs(v, p);
    out.predicted_p1 = p1;
    out.predicted_p2 = p2;
    return out;
}

PayoffRange payoff_range(const Valuations& v) {
    auto degenerate = [](const Rational& a, const Rational& b) {
        return PayoffRange{{a, a}, {b, b}};
    };
    switch (classify(v)) {
        case CaseTag::IntSym:
            return {{kZero, kOne}, {kZero, kOne}};
        case CaseTag::IntV2Eq2: {
            // P1 = v1 - b*v1/2 - 1 decreases in b over (0, min(1, 4/v1)].
            Rational b_hi = min(kOne, Rational(4) / v.v1);
            return {{v.v1 - b_hi * v.v1 / 2 - kOne, v.v1 - kOne}, {kZero, kZero}};
        }
        case CaseTag::IntV2Ge4: {
            auto c = v2ge4_ctx(v);
            return {{v.v1 - c.b_hi * v.v1 / v.v2 - half(v.v2), v.v1 - c.b_lo * v.v1 / v.v2 - half(v.v2)},
                    {kZero, kZero}};
        }
        case CaseTag::NonIntEqFloor: {
            auto [p1, p2] = predicted_payoffs(v, UniqueParams{});
            return degenerate(p1, p2);
        }
        case CaseTag::NonIntBoundary: {
            // P2 = v2/2 - m - (v2/v1)*alpha decreases from its alpha=0 value to 0.
            Rational m = half(v.v2).floor();
            return {{kOne, kOne}, {kZero, half(v.v2) - m}};
        }
        case CaseTag::NonIntFar:
            return degenerate(v.v1 + kOne - 2 * half(v.v2).ceil(), kZero);
        case CaseTag::SmallGt:
            return degenerate(v.v1 - kOne, kZero);
        case CaseTag::SmallEq:
            return {{kOne, kOne}, {kZero, half(v.v2)}};
        case CaseTag::SmallLt:
            return degenerate(half(v.v1), half(v.v2));
    }
    throw std::logic_error("payoff_range: unknown case");
}

namespace {

ordered_json dist_json(const FiniteDist& d) {
    ordered_json arr = ordered_json::array();
    for (const auto& [bid, prob] : d.weights()) arr.push_back({bid, prob.str()});
    return arr;
}

ordered_json vec_json(const std::vector<Rational>& w) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : w) arr.push_back(x.str());
    return arr;
}

ordered_json params_json(const EqParams& p) {
    ordered_json j = ordered_json::object();
    if (const auto* q = std::get_if<SymParams>(&p)) {
        j["alpha"] = q->alpha.str();
        j["beta"] = q->beta.str();
    } else if (const auto* q = std::get_if<V2Eq2Params>(&p)) {
        j["b"] = q->b.str();
        j["lambda"] = q->lambda.str();
    } else if (const auto* q = std::get_if<V2Ge4Params>(&p)) {
        j["b"] = q->b.str();
        j["lambda_odd"] = q->lambda_odd.str();
        j["lambda_even"] = q->lambda_even.str();
        j["lambda_shift"] = q->lambda_shift.str();
        j["lambda_w"] = vec_json(q->lambda_w);
    } else if (const auto* q = std::get_if<BoundaryParams>(&p)) {
        j["alpha"] = q->alpha.str();
        j["lambda_odd"] = q->lambda_odd.str();
        j["lambda_even"] = q->lambda_even.str();
        j["lambda_v"] = vec_json(q->lambda_v);
        j["kappa_v"] = vec_json(q->kappa_v);
    } else if (const auto* q = std::get_if<FarParams>(&p)) {
        j["weight_u"] = q->weight_u.str();
        j["weight_x"] = vec_json(q->weight_x);
    } else if (const auto* q = std::get_if<SmallEqParams>(&p)) {
        j["alpha"] = q->alpha.str();
    }
    return j;
}

ordered_json interval_json(const Interval& iv) {
    ordered_json j = ordered_json::object();
    j["lo"] = iv.lo.str();
    j["hi"] = iv.hi.str();
    j["lo_open"] = iv.lo_open;
    j["hi_open"] = iv.hi_open;
    return j;
}

}  // namespace

std::string profile_to_json(const Valuations& v, const EqParams& p, const Profile& profile,
                            const PayoffRange* range, const ParamSpace* space) {
    ordered_json j;
    j["case"] = std::string(case_name(profile.tag));
    j["v1"] = v.v1.str();
    j["v2"] = v.v2.str();
    j["params"] = params_json(p);
    j["x"] = dist_json(profile.x);
    j["y"] = dist_json(profile.y);
    j["p1"] = profile.predicted_p1.str();
    j["p2"] = profile.predicted_p2.str();
    if (range != nullptr) {
        j["p1_range"] = {range->p1.lo.str(), range->p1.hi.str()};
        j["p2_range"] = {range->p2.lo.str(), range->p2.hi.str()};
    }
    if (space != nullptr) {
        ordered_json s = ordered_json::object();
        for (const auto& [name, iv] : space->scalars) s[name] = interval_json(iv);
        j["param_space"] = ordered_json::object();
        j["param_space"]["scalars"] = s;
        j["param_space"]["constraints"] = space->constraints;
    }
    return j.dump(2);
}

namespace {

Rational json_scalar(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("params missing required key '") + key + "'");
    const auto& val = j.at(key);
    if (val.is_number_integer()) return Rational(val.get<long>());
    if (!val.is_string()) throw std::invalid_argument(std::string("params key '") + key + "' must be a rational string");
    return Rational::parse(val.get<std::string>());
}

std::vector<Rational> json_vector(const nlohmann::json& j, const char* key, int len) {
    std::vector<Rational> out(static_cast<std::size_t>(len), Rational(0));
    if (!j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array() || static_cast<int>(arr.size()) != len)
        throw std::invalid_argument(std::string("params key '") + key + "' must be a dense array of length " +
                                    std::to_string(len));
    for (int i = 0; i < len; ++i) {
        const auto& val = arr[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] =
            val.is_number_integer() ? Rational(val.get<long>()) : Rational::parse(val.get<std::string>());
    }
    return out;
}

}  // namespace

EqParams params_from_json(const Valuations& v, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("params must be a JSON object");
    switch (classify(v)) {
        case CaseTag::IntSym:
            return SymParams{json_scalar(j, "alpha"), json_scalar(j, "beta")};
        case CaseTag::IntV2Eq2:
            return V2Eq2Params{json_scalar(j, "b"), json_scalar(j, "lambda")};
        case CaseTag::IntV2Ge4: {
            auto c = v2ge4_ctx(v);
            return V2Ge4Params{json_scalar(j, "b"), json_scalar(j, "lambda_odd"),
                               json_scalar(j, "lambda_even"), json_scalar(j, "lambda_shift"),
                               json_vector(j, "lambda_w", c.m - 1)};
        }
        case CaseTag::NonIntEqFloor:
        case CaseTag::SmallGt:
        case CaseTag::SmallLt:
            if (!j.empty()) throw std::invalid_argument("this case has a unique equilibrium: params must be {}");
            return UniqueParams{};
        case CaseTag::NonIntBoundary: {
            auto c = shift_ctx(v);
            return BoundaryParams{json_scalar(j, "alpha"), json_scalar(j, "lambda_odd"),
                                  json_scalar(j, "lambda_even"), json_vector(j, "lambda_v", c.m),
                                  json_vector(j, "kappa_v", c.m)};
        }
        case CaseTag::NonIntFar: {
            auto c = shift_ctx(v);
            return FarParams{json_scalar(j, "weight_u"), json_vector(j, "weight_x", c.m)};
        }
        case CaseTag::SmallEq:
            return SmallEqParams{json_scalar(j, "alpha")};
    }
    throw std::logic_error("params_from_json: unknown case");
}

}  // namespace allpay
