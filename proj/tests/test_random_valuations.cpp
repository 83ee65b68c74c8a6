#include <doctest.h>

#include <random>

#include "allpay/certify.hpp"
#include "allpay/payoff.hpp"
#include "allpay/statics.hpp"

using namespace allpay;

// Randomised sweep over rational valuations with denominators up to 12:
// every sampled parameter point of every case must build, certify under both
// rule sets, and hit its predicted payoffs exactly. Fixed seed, deterministic.
TEST_CASE("random rational valuations: sampled profiles certify exactly") {
    std::mt19937 rng(0xA110C8);
    std::uniform_int_distribution<int> den_pick(1, 12);
    int profiles = 0;
    for (int trial = 0; trial < 250; ++trial) {
        int d2 = den_pick(rng);
        Rational v2(std::uniform_int_distribution<int>(1, 12 * d2)(rng), d2);
        int d1 = den_pick(rng);
        Rational v1 = v2 + Rational(std::uniform_int_distribution<int>(0, 6 * d1)(rng), d1);
        Valuations v{v1, v2};
        CAPTURE(v1.str());
        CAPTURE(v2.str());

        for (const auto& p : sample_params(v)) {
            auto profile = build_equilibrium(v, p);
            auto cert = certify_allpay(v, profile.x, profile.y);
            REQUIRE(cert.is_equilibrium);
            REQUIRE(cert.max_gain_p1 == Rational(0));
            REQUIRE(cert.max_gain_p2 == Rational(0));
            REQUIRE(certify_lotto(profile.x, profile.y).is_equilibrium);

            auto [p1, p2] = predicted_payoffs(v, p);
            REQUIRE(allpay_payoff(v.v1, profile.x, profile.y) == p1);
            REQUIRE(allpay_payoff(v.v2, profile.y, profile.x) == p2);
            ++profiles;
        }

        // the two payoff routes must agree in both role orders (the call
        // throws internally on any closed-form mismatch for non-even values)
        payoff_difference(v1, v2);
        payoff_difference(v2, v1);
    }
    CHECK(profiles > 1000);
}

// Cross pairings of distinct sampled equilibria stay equilibria, on random
// valuations rather than the fixed showcase pairs.
TEST_CASE("random rational valuations: equilibrium components recombine") {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> den_pick(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        int d2 = den_pick(rng);
        Rational v2(std::uniform_int_distribution<int>(1, 10 * d2)(rng), d2);
        int d1 = den_pick(rng);
        Rational v1 = v2 + Rational(std::uniform_int_distribution<int>(0, 4 * d1)(rng), d1);
        Valuations v{v1, v2};
        CAPTURE(v1.str());
        CAPTURE(v2.str());
        auto pts = sample_params(v);
        REQUIRE(cross_check(v, pts.front(), pts.back()));
        if (pts.size() >= 3) REQUIRE(cross_check(v, pts[1], pts[pts.size() - 2]));
    }
}
