#include <benchmark/benchmark.h>

#include "allpay/certify.hpp"
#include "allpay/equilibria.hpp"
#include "allpay/payoff.hpp"
#include "allpay/statics.hpp"

using namespace allpay;

static void BM_HValue(benchmark::State& state) {
    auto x = uniform_odd(static_cast<int>(state.range(0)));
    auto y = uniform_even(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(h_value(x, y));
}
BENCHMARK(BM_HValue)->Arg(4)->Arg(12)->Arg(32);

static void BM_AllpayPayoff(benchmark::State& state) {
    auto x = w_dist(3, 8);
    auto y = v_dist(5, 8);
    Rational v(23, 5);
    for (auto _ : state) benchmark::DoNotOptimize(allpay_payoff(v, x, y));
}
BENCHMARK(BM_AllpayPayoff);

static void BM_BestResponse(benchmark::State& state) {
    auto y = uniform_even(static_cast<int>(state.range(0)));
    Rational v(23, 5);
    for (auto _ : state) benchmark::DoNotOptimize(best_response(v, y));
}
BENCHMARK(BM_BestResponse)->Arg(8)->Arg(32);

static void BM_BuildEquilibrium(benchmark::State& state) {
    Valuations v{Rational(6), Rational(27, 5)};
    auto params = canonical_params(v);
    for (auto _ : state) benchmark::DoNotOptimize(build_equilibrium(v, params));
}
BENCHMARK(BM_BuildEquilibrium);

static void BM_CertifyAllpay(benchmark::State& state) {
    Valuations v{Rational(8), Rational(6)};
    auto profile = build_equilibrium(v, canonical_params(v));
    for (auto _ : state) benchmark::DoNotOptimize(certify_allpay(v, profile.x, profile.y));
}
BENCHMARK(BM_CertifyAllpay);

static void BM_CertifyLotto(benchmark::State& state) {
    auto x = uniform_odd(static_cast<int>(state.range(0)));
    auto y = uniform_even(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(certify_lotto(x, y));
}
BENCHMARK(BM_CertifyLotto)->Arg(4)->Arg(12);

static void BM_Sweep(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(Rational(23, 5), Rational(1, 5), Rational(8), Rational(1, 5)));
}
BENCHMARK(BM_Sweep);

BENCHMARK_MAIN();
