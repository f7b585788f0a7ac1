#include "lozi/geometry.hpp"
#include "lozi/quadext.hpp"
#include "lozi/rational.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lozi;

void bench_rational_arith(benchmark::State& state) {
    Rational x(355, 113);
    const Rational step(1, 7919);
    for (auto _ : state) {
        x = x * step + step;
        benchmark::DoNotOptimize(x.sign());
    }
}
BENCHMARK(bench_rational_arith);

void bench_quadext_arith(benchmark::State& state) {
    const auto field = QuadField::make(Rational(409, 100));
    QuadExt x(Rational(1, 3), Rational(1, 5), field);
    const QuadExt step(Rational(1, 97), Rational(-1, 89), field);
    for (auto _ : state) {
        x = x * step + step;
        benchmark::DoNotOptimize(x.sign());
    }
}
BENCHMARK(bench_quadext_arith);

void bench_quadext_sign(benchmark::State& state) {
    const auto field = QuadField::make(Rational(409, 100));
    // r and s of opposite sign force the quadratic comparison path.
    const QuadExt x(Rational(20224, 10000), Rational(-1), field);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x.sign());
    }
}
BENCHMARK(bench_quadext_sign);

void bench_lozi_step(benchmark::State& state) {
    const Params p = Params::parse("17/10", "3/10");
    PlanePoint pt{p.q(Rational(1, 3)), p.q(Rational(1, 5))};
    int n = 0;
    for (auto _ : state) {
        pt = lozi_apply(p, pt);
        // Keep coordinate sizes bounded: restart the orbit periodically.
        if (++n % 64 == 0) pt = PlanePoint{p.q(Rational(1, 3)), p.q(Rational(1, 5))};
        benchmark::DoNotOptimize(pt.x.sign());
    }
}
BENCHMARK(bench_lozi_step);

} // namespace

BENCHMARK_MAIN();
