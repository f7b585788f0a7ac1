#include "lozi/admissible.hpp"
#include "lozi/manifold.hpp"
#include "lozi/symbolic.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace lozi;

const Params& flagship() {
    static const Params p = Params::parse("7/4", "1/2");
    return p;
}

void bench_grow(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const ManifoldWindow w = ManifoldWindow::grow(flagship(), depth);
        benchmark::DoNotOptimize(w.point_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bench_grow)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

void bench_kneading(benchmark::State& state) {
    const ManifoldWindow w = ManifoldWindow::grow(flagship(), 9);
    for (auto _ : state) {
        const KneadingSet ks = kneading_set(w, 16);
        benchmark::DoNotOptimize(ks.entries.size());
    }
}
BENCHMARK(bench_kneading)->Unit(benchmark::kMillisecond);

void bench_admissibility(benchmark::State& state) {
    const ManifoldWindow w = ManifoldWindow::grow(flagship(), 9);
    const KneadingSet ks = kneading_set(w, 16);
    // All '-'-headed words of length 8, checked per iteration.
    std::vector<SymbolWord> words;
    for (unsigned m = 0; m < 128; ++m) {
        SymbolWord word{Sym::minus};
        for (int i = 0; i < 7; ++i) word.push_back((m >> i) & 1 ? Sym::plus : Sym::minus);
        words.push_back(std::move(word));
    }
    for (auto _ : state) {
        int accepted = 0;
        for (const auto& word : words) {
            accepted += admissible_kneading(ks, word).accepted() ? 1 : 0;
        }
        benchmark::DoNotOptimize(accepted);
    }
}
BENCHMARK(bench_admissibility);

void bench_order(benchmark::State& state) {
    const ManifoldWindow w = ManifoldWindow::grow(flagship(), 8);
    const auto pts = w.sample_points(64, 12345, 20);
    for (auto _ : state) {
        int before = 0;
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
            before += w.order_compare(pts[i], pts[i + 1]) == OrderResult::before ? 1 : 0;
        }
        benchmark::DoNotOptimize(before);
    }
}
BENCHMARK(bench_order);

} // namespace
