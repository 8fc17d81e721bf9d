#include <benchmark/benchmark.h>

#include "spinflux/spinflux.hpp"

using namespace spinflux;

namespace {

VirtualLattice lattice(int n, double sigma) {
    return sample_vacancies(build_lattice(n, n, Boundary::open, Boundary::periodic), sigma, 1);
}

RelaxationModel spin_1f() {
    RelaxationModel r;
    r.kind = RelaxationKind::spin_1f;
    r.seed = 2;
    return r;
}

void BM_Assemble(benchmark::State& state) {
    const auto lat = lattice(static_cast<int>(state.range(0)), 0.75);
    for (auto _ : state) benchmark::DoNotOptimize(assemble_P(lat, {}, {}, 12.0));
}
BENCHMARK(BM_Assemble)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_DiagonalizeSymmetrized(benchmark::State& state) {
    const auto m = assemble_P(lattice(static_cast<int>(state.range(0)), 0.75), {}, {}, 12.0);
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize(m, SolverPath::symmetrized));
}
BENCHMARK(BM_DiagonalizeSymmetrized)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_DiagonalizeGeneral(benchmark::State& state) {
    const auto m = assemble_P(lattice(static_cast<int>(state.range(0)), 1.0), {}, spin_1f(), 12.0);
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize(m, SolverPath::general));
}
BENCHMARK(BM_DiagonalizeGeneral)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_NoiseSpectrum(benchmark::State& state) {
    const auto lat = lattice(20, 0.75);
    const auto m = assemble_P(lat, {}, {}, 12.0);
    const auto modes = contributing_modes(mode_weights(diagonalize(m), m, edge_flux_vector(lat)));
    const auto omega = log_grid(1e-3, 1e3, 100);
    for (auto _ : state) benchmark::DoNotOptimize(flux_noise(modes, 12.0, omega));
}
BENCHMARK(BM_NoiseSpectrum)->Unit(benchmark::kMicrosecond);

void BM_Ensemble(benchmark::State& state) {
    EnsembleConfig c;
    c.instance.sigma = 0.75;
    c.M = 8;
    c.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ensemble_run(c));
}
BENCHMARK(BM_Ensemble)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
