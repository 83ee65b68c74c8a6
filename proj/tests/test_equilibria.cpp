#include <doctest.h>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "allpay/equilibria.hpp"
#include "allpay/errors.hpp"
#include "allpay/payoff.hpp"

using namespace allpay;

namespace {

const std::vector<Valuations> kBattery = {
    {Rational(4), Rational(4)},        // IntSym
    {Rational(2), Rational(2)},        // IntSym, m = 0
    {Rational(8), Rational(8)},        // IntSym, m = 3
    {Rational(4), Rational(2)},        // IntV2Eq2
    {Rational(5, 2), Rational(2)},     // IntV2Eq2 with b capped at 1
    {Rational(6), Rational(4)},        // IntV2Ge4
    {Rational(9, 2), Rational(4)},     // IntV2Ge4, non-even v1
    {Rational(8), Rational(6)},        // IntV2Ge4, m = 3
    {Rational(3), Rational(3)},        // NonIntEqFloor
    {Rational(10, 3), Rational(10, 3)},// NonIntEqFloor
    {Rational(23, 5), Rational(9, 2)}, // NonIntEqFloor
    {Rational(4), Rational(10, 3)},    // NonIntBoundary
    {Rational(6), Rational(5)},        // NonIntBoundary, odd v2
    {Rational(6), Rational(27, 5)},    // NonIntBoundary, upper-branch alphas feasible
    {Rational(8), Rational(3)},        // NonIntFar
    {Rational(5), Rational(10, 3)},    // NonIntFar, high fractional part
    {Rational(23, 5), Rational(7, 2)}, // NonIntFar, non-even v1
    {Rational(3), Rational(1)},        // SmallGt
    {Rational(2), Rational(3, 2)},     // SmallEq
    {Rational(3, 2), Rational(1)},     // SmallLt
};

// Re-derivation of each tag's defining predicate, used to check that exactly
// one branch condition holds for any valid pair.
bool tag_condition(CaseTag t, const Valuations& v) {
    Rational h1 = v.v1 / 2, h2 = v.v2 / 2;
    switch (t) {
        case CaseTag::IntSym: return h2.is_integer() && h2 >= Rational(1) && v.v1 == v.v2;
        case CaseTag::IntV2Eq2: return v.v2 == Rational(2) && v.v1 > v.v2;
        case CaseTag::IntV2Ge4: return h2.is_integer() && v.v2 >= Rational(4) && v.v1 > v.v2;
        case CaseTag::NonIntEqFloor:
            return v.v2 > Rational(2) && !h2.is_integer() && h1.floor() == h2.floor();
        case CaseTag::NonIntBoundary:
            return v.v2 > Rational(2) && !h2.is_integer() && h1 == h2.floor() + Rational(1);
        case CaseTag::NonIntFar:
            return v.v2 > Rational(2) && !h2.is_integer() && h1 > h2.floor() + Rational(1) &&
                   h1.floor() != h2.floor();
        case CaseTag::SmallGt: return v.v2 < Rational(2) && h1 > Rational(1);
        case CaseTag::SmallEq: return v.v2 < Rational(2) && h1 == Rational(1);
        case CaseTag::SmallLt: return v.v2 < Rational(2) && h1 < Rational(1);
    }
    return false;
}

}  // namespace

TEST_CASE("classify picks the documented branches") {
    CHECK(classify({Rational(4), Rational(4)}) == CaseTag::IntSym);
    CHECK(classify({Rational(2), Rational(2)}) == CaseTag::IntSym);
    CHECK(classify({Rational(4), Rational(2)}) == CaseTag::IntV2Eq2);
    CHECK(classify({Rational(6), Rational(4)}) == CaseTag::IntV2Ge4);
    CHECK(classify({Rational(3), Rational(3)}) == CaseTag::NonIntEqFloor);
    CHECK(classify({Rational(23, 5), Rational(9, 2)}) == CaseTag::NonIntEqFloor);
    CHECK(classify({Rational(4), Rational(10, 3)}) == CaseTag::NonIntBoundary);
    CHECK(classify({Rational(6), Rational(5)}) == CaseTag::NonIntBoundary);
    CHECK(classify({Rational(8), Rational(3)}) == CaseTag::NonIntFar);
    CHECK(classify({Rational(3), Rational(1)}) == CaseTag::SmallGt);
    CHECK(classify({Rational(2), Rational(1)}) == CaseTag::SmallEq);
    CHECK(classify({Rational(1), Rational(1)}) == CaseTag::SmallLt);
}

TEST_CASE("classify is total and single-valued on a grid with all boundary shapes") {
    const CaseTag all[] = {CaseTag::IntSym,         CaseTag::IntV2Eq2, CaseTag::IntV2Ge4,
                           CaseTag::NonIntEqFloor,  CaseTag::NonIntBoundary,
                           CaseTag::NonIntFar,      CaseTag::SmallGt,  CaseTag::SmallEq,
                           CaseTag::SmallLt};
    for (int k2 = 1; k2 <= 36; ++k2)
        for (int k1 = k2; k1 <= 42; ++k1) {
            Valuations v{Rational(k1, 6), Rational(k2, 6)};
            CaseTag got = classify(v);
            int matches = 0;
            for (CaseTag t : all)
                if (tag_condition(t, v)) ++matches;
            CAPTURE(k1);
            CAPTURE(k2);
            CHECK(matches == 1);
            CHECK(tag_condition(got, v));
        }
}

TEST_CASE("invalid valuations are rejected with a role-swap hint") {
    CHECK_THROWS_AS(Valuations(Rational(1), Rational(2)), invalid_valuation_error);
    CHECK_THROWS_AS(Valuations(Rational(2), Rational(0)), invalid_valuation_error);
    CHECK_THROWS_AS(Valuations(Rational(2), Rational(-1)), invalid_valuation_error);
    try {
        Valuations v(Rational(1), Rational(2));
    } catch (const invalid_valuation_error& e) {
        CHECK(std::string(e.what()).find("swap") != std::string::npos);
    }
}

TEST_CASE("param_space reports the documented scalar intervals") {
    auto ge4 = param_space({Rational(6), Rational(4)});
    REQUIRE(ge4.scalars.size() == 1);
    CHECK(ge4.scalars[0].first == "b");
    CHECK(ge4.scalars[0].second.lo == Rational(2, 3));
    CHECK(ge4.scalars[0].second.hi == Rational(2));

    auto eq2 = param_space({Rational(4), Rational(2)});
    REQUIRE(eq2.scalars.size() == 1);
    CHECK(eq2.scalars[0].second.lo == Rational(0));
    CHECK(eq2.scalars[0].second.lo_open);
    CHECK(eq2.scalars[0].second.hi == Rational(1));

    auto sym = param_space({Rational(4), Rational(4)});
    REQUIRE(sym.scalars.size() == 2);
    CHECK(sym.scalars[0].second.lo == Rational(0));
    CHECK(sym.scalars[0].second.hi == Rational(1));
    CHECK(sym.scalars[1].second.hi == Rational(1));
}

TEST_CASE("canonical parameters match the documented points") {
    auto ge4 = std::get<V2Ge4Params>(canonical_params({Rational(6), Rational(4)}));
    CHECK(ge4.b == Rational(4, 3));
    CHECK(ge4.lambda_odd == Rational(1));
    CHECK(ge4.lambda_even == Rational(0));
    CHECK(ge4.lambda_shift == Rational(0));

    auto far = std::get<FarParams>(canonical_params({Rational(8), Rational(3)}));
    CHECK(far.weight_u == Rational(1));
    CHECK(far.weight_x == std::vector<Rational>{Rational(0)});

    auto sym = std::get<SymParams>(canonical_params({Rational(4), Rational(4)}));
    CHECK(sym.alpha == Rational(0));
    CHECK(sym.beta == Rational(0));

    auto eq2 = std::get<V2Eq2Params>(canonical_params({Rational(4), Rational(2)}));
    CHECK(eq2.b == Rational(1, 2));
    CHECK(eq2.lambda == Rational(1));
}

TEST_CASE("build_equilibrium produces the documented profiles") {
    Valuations far{Rational(8), Rational(3)};
    auto p = build_equilibrium(far, canonical_params(far));
    CHECK(p.x == FiniteDist::from_weights({{1, Rational(2, 3)}, {3, Rational(1, 3)}}));
    CHECK(p.y == FiniteDist::from_weights({{0, Rational(3, 4)}, {2, Rational(1, 4)}}));

    Valuations sym{Rational(4), Rational(4)};
    auto q = build_equilibrium(sym, SymParams{Rational(1), Rational(0)});
    CHECK(q.x == uniform_odd(2));
    CHECK(q.y == uniform_even(1));

    Valuations small{Rational(3), Rational(1)};
    auto r = build_equilibrium(small, UniqueParams{});
    CHECK(r.x == dirac(1));
    CHECK(r.y == dirac(0));
}

TEST_CASE("predicted payoffs match the case formulas") {
    Valuations far{Rational(8), Rational(3)};
    CHECK(predicted_payoffs(far, canonical_params(far)) ==
          std::pair{Rational(5), Rational(0)});

    Valuations floor3{Rational(3), Rational(3)};
    CHECK(predicted_payoffs(floor3, UniqueParams{}) ==
          std::pair{Rational(1, 2), Rational(1, 2)});

    Valuations sym{Rational(4), Rational(4)};
    CHECK(predicted_payoffs(sym, SymParams{Rational(0), Rational(0)}) ==
          std::pair{Rational(1), Rational(1)});

    Valuations small{Rational(3), Rational(1)};
    CHECK(predicted_payoffs(small, UniqueParams{}) == std::pair{Rational(2), Rational(0)});
}

TEST_CASE("canonical payoff of the even-weaker cases lands on the continuous value") {
    for (const auto& v : kBattery) {
        CaseTag tag = classify(v);
        if (tag != CaseTag::IntV2Eq2 && tag != CaseTag::IntV2Ge4) continue;
        auto [p1, p2] = predicted_payoffs(v, canonical_params(v));
        CHECK(p1 == v.v1 - v.v2);
        CHECK(p2 == Rational(0));
    }
}

TEST_CASE("payoff_range matches the documented intervals") {
    auto sym = payoff_range({Rational(4), Rational(4)});
    CHECK(sym.p1.lo == Rational(0));
    CHECK(sym.p1.hi == Rational(1));
    CHECK(sym.p2.lo == Rational(0));
    CHECK(sym.p2.hi == Rational(1));

    auto ge4 = payoff_range({Rational(6), Rational(4)});
    CHECK(ge4.p1.lo == Rational(1));
    CHECK(ge4.p1.hi == Rational(3));
    CHECK(ge4.p2.lo == Rational(0));
    CHECK(ge4.p2.hi == Rational(0));

    auto far = payoff_range({Rational(8), Rational(3)});
    CHECK(far.p1.lo == Rational(5));
    CHECK(far.p1.hi == Rational(5));
    CHECK(far.p2.lo == Rational(0));
    CHECK(far.p2.hi == Rational(0));

    auto boundary = payoff_range({Rational(6), Rational(5)});
    CHECK(boundary.p1.lo == Rational(1));
    CHECK(boundary.p1.hi == Rational(1));
    CHECK(boundary.p2.lo == Rational(0));
    CHECK(boundary.p2.hi == Rational(1, 2));
}

namespace {

// The mean each case prescribes for the built strategies.
std::pair<Rational, Rational> expected_means(const Valuations& v, const EqParams& p) {
    Rational h2 = v.v2 / 2;
    switch (classify(v)) {
        case CaseTag::IntSym: {
            const auto& q = std::get<SymParams>(p);
            Rational m = h2 - 1;
            return {m + q.alpha, m + q.beta};
        }
        case CaseTag::IntV2Eq2: {
            const auto& q = std::get<V2Eq2Params>(p);
            return {Rational(1), q.b};
        }
        case CaseTag::IntV2Ge4: {
            const auto& q = std::get<V2Ge4Params>(p);
            return {h2, q.b};
        }
        case CaseTag::NonIntEqFloor:
            return {h2.floor(), h2.floor()};
        case CaseTag::NonIntBoundary: {
            const auto& q = std::get<BoundaryParams>(p);
            return {h2.floor() + q.alpha, h2.floor()};
        }
        case CaseTag::NonIntFar: {
            Rational m = h2.floor();
            Rational alpha = h2.ceil() * (h2 - m) / h2;
            Rational b = m * (m + Rational(1)) / (v.v1 / 2);
            return {m + alpha, b};
        }
        case CaseTag::SmallGt:
            return {Rational(1), Rational(0)};
        case CaseTag::SmallEq:
            return {std::get<SmallEqParams>(p).alpha, Rational(0)};
        case CaseTag::SmallLt:
            return {Rational(0), Rational(0)};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("built strategies have the case-prescribed means and exact payoffs") {
    for (const auto& v : kBattery) {
        auto points = sample_params(v);
        CHECK(!points.empty());
        for (const auto& p : points) {
            auto profile = build_equilibrium(v, p);
            auto [mean_x, mean_y] = expected_means(v, p);
            CAPTURE(v.v1.str());
            CAPTURE(v.v2.str());
            CHECK(profile.x.expectation() == mean_x);
            CHECK(profile.y.expectation() == mean_y);

            auto [p1, p2] = predicted_payoffs(v, p);
            CHECK(allpay_payoff(v.v1, profile.x, profile.y) == p1);
            CHECK(allpay_payoff(v.v2, profile.y, profile.x) == p2);
        }
    }
}

TEST_CASE("non-degenerate cases expose at least five sample points") {
    for (const auto& v : kBattery) {
        switch (classify(v)) {
            case CaseTag::IntSym:
            case CaseTag::IntV2Eq2:
            case CaseTag::IntV2Ge4:
            case CaseTag::NonIntBoundary:
            case CaseTag::NonIntFar:
            case CaseTag::SmallEq:
                CHECK(sample_params(v).size() >= 5);
                break;
            default:
                CHECK(sample_params(v).size() == 1);
        }
    }
}

TEST_CASE("infeasible parameters name the violated constraint") {
    Valuations ge4{Rational(6), Rational(4)};
    auto good = std::get<V2Ge4Params>(canonical_params(ge4));

    auto bad_b = good;
    bad_b.b = Rational(3);
    CHECK_THROWS_AS(build_equilibrium(ge4, bad_b), constraint_violation_error);
    try {
        build_equilibrium(ge4, bad_b);
    } catch (const constraint_violation_error& e) {
        CHECK(std::string(e.what()).find("b outside") != std::string::npos);
    }

    auto bad_sum = good;
    bad_sum.lambda_odd = Rational(1, 2);
    try {
        build_equilibrium(ge4, bad_sum);
        CHECK(false);
    } catch (const constraint_violation_error& e) {
        CHECK(std::string(e.what()).find("sum") != std::string::npos);
    }

    auto bad_balance = good;
    bad_balance.lambda_odd = Rational(1, 2);
    bad_balance.lambda_even = Rational(1, 2);
    CHECK_THROWS_AS(build_equilibrium(ge4, bad_balance), constraint_violation_error);

    // record of the wrong case shape
    CHECK_THROWS_AS(build_equilibrium(ge4, SymParams{Rational(0), Rational(0)}),
                    constraint_violation_error);

    Valuations boundary{Rational(6), Rational(27, 5)};
    auto pts = sample_params(boundary);
    bool saw_upper = false;
    for (const auto& p : pts) {
        const auto& q = std::get<BoundaryParams>(p);
        if (q.alpha > Rational(3, 5)) saw_upper = true;
    }
    CHECK(saw_upper);  // the upper alpha branch is exercised
    BoundaryParams bad_kappa{Rational(7, 9), Rational(1), Rational(0),
                             {Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
    bad_kappa.kappa_v[0] = Rational(1);
    bad_kappa.lambda_odd = Rational(0);
    CHECK_THROWS_AS(build_equilibrium(boundary, bad_kappa), constraint_violation_error);
}

TEST_CASE("profile JSON carries the documented keys and params round-trip") {
    for (const auto& v : kBattery) {
        auto params = canonical_params(v);
        auto profile = build_equilibrium(v, params);
        auto range = payoff_range(v);
        auto text = profile_to_json(v, params, profile, &range);
        auto j = nlohmann::json::parse(text);
        CHECK(j.at("case").get<std::string>() == std::string(case_name(profile.tag)));
        CHECK(j.at("v1").get<std::string>() == v.v1.str());
        CHECK(j.at("p1").get<std::string>() == profile.predicted_p1.str());
        CHECK(j.at("x").is_array());
        CHECK(j.at("p1_range").is_array());

        EqParams back = params_from_json(v, j.at("params").dump());
        CHECK(back == params);
    }
}

TEST_CASE("params_from_json validates shape") {
    Valuations far{Rational(8), Rational(3)};
    CHECK_THROWS_AS(params_from_json(far, R"({"weight_u":"1","weight_x":["0","0"]})"),
                    std::invalid_argument);  // wrong vector length
    CHECK_THROWS_AS(params_from_json(far, R"({})"), std::invalid_argument);  // missing scalar
    Valuations floor3{Rational(3), Rational(3)};
    CHECK_THROWS_AS(params_from_json(floor3, R"({"alpha":"0"})"), std::invalid_argument);
    CHECK(std::holds_alternative<UniqueParams>(params_from_json(floor3, "{}")));
}
