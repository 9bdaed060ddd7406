#include <benchmark/benchmark.h>

#include "iwkin/collision.hpp"
#include "iwkin/resonance.hpp"

namespace {

void BM_solve_vertical(benchmark::State& state) {
    for (auto _ : state) {
        for (int b = 0; b < 3; ++b) {
            auto roots = iwkin::solve_vertical_roots(static_cast<iwkin::Branch>(b), 1.0, 0.8, 0.7,
                                                     1.3);
            benchmark::DoNotOptimize(roots);
        }
    }
}
BENCHMARK(BM_solve_vertical);

void BM_integrand(benchmark::State& state) {
    const iwkin::SpectralExponents s{3.7, 0.4, 1.0};
    const iwkin::Wavenumber p{1.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(iwkin::integrand(s, p, 0.8, 0.7));
    }
}
BENCHMARK(BM_integrand);

void BM_evaluate_I_level0(benchmark::State& state) {
    iwkin::QuadratureConfig cfg;
    cfg.base_resolution = static_cast<int>(state.range(0));
    cfg.max_levels = 2;
    cfg.rel_tol = 1e30;  // force exactly two levels
    const iwkin::SpectralExponents s{3.7, 0.4, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(iwkin::evaluate_I(s, {1.0, 1.0}, cfg));
    }
}
BENCHMARK(BM_evaluate_I_level0)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
