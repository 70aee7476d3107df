#include <benchmark/benchmark.h>

#include <morseb/cohomology.hpp>
#include <morseb/examples.hpp>
#include <morseb/models.hpp>
#include <morseb/spectral.hpp>
#include <morseb/witten.hpp>

using namespace morseb;

namespace {

void BM_BuildComplex(benchmark::State& state) {
    const auto resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto inst = generate_example("solid_torus", resolution);
        benchmark::DoNotOptimize(inst.complex.simplex_count(1));
    }
}
BENCHMARK(BM_BuildComplex)->Arg(4)->Arg(6)->Arg(8);

void BM_ExactRank(benchmark::State& state) {
    const auto inst = generate_example("annulus", static_cast<int>(state.range(0)));
    const auto rcc = relative_cochain_complex(inst.complex, inst.decomposition());
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(rcc.coboundary[1]));
}
BENCHMARK(BM_ExactRank)->Arg(8)->Arg(16)->Arg(32);

void BM_Betti(benchmark::State& state) {
    const auto inst = generate_example("solid_torus", static_cast<int>(state.range(0)));
    const auto rcc = relative_cochain_complex(inst.complex, inst.decomposition());
    for (auto _ : state) benchmark::DoNotOptimize(betti(rcc));
}
BENCHMARK(BM_Betti)->Arg(4)->Arg(6);

void BM_ClassifyCritical(benchmark::State& state) {
    const auto inst = generate_example("ball3", static_cast<int>(state.range(0)));
    const auto boundary = detect_boundary(inst.complex);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_pl_critical(inst.complex, boundary).interior.size());
}
BENCHMARK(BM_ClassifyCritical)->Arg(2)->Arg(4);

void BM_AssembleLaplacian(benchmark::State& state) {
    const auto inst = generate_example("annulus", static_cast<int>(state.range(0)));
    const auto rcc = relative_cochain_complex(inst.complex, inst.decomposition());
    const auto pot = simplex_potential(inst.complex, rcc);
    const auto weights = unit_weights(rcc);
    for (auto _ : state) {
        const auto ds = deformed_coboundary(rcc, pot, 5.0);
        benchmark::DoNotOptimize(assemble_laplacian(ds, weights, 1, 5.0).size());
    }
}
BENCHMARK(BM_AssembleLaplacian)->Arg(8)->Arg(24);

void BM_DenseEigensolve(benchmark::State& state) {
    const auto inst = generate_example("annulus", static_cast<int>(state.range(0)));
    const auto rcc = relative_cochain_complex(inst.complex, inst.decomposition());
    const auto ds = deformed_coboundary(rcc, simplex_potential(inst.complex, rcc), 1.0);
    const auto lap = assemble_laplacian(ds, unit_weights(rcc), 1, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(eigensolve(lap, SolverMode::Dense).eigenvalues.back());
}
BENCHMARK(BM_DenseEigensolve)->Arg(16)->Arg(32);

void BM_LanczosLowest(benchmark::State& state) {
    const auto inst = generate_example("annulus", static_cast<int>(state.range(0)));
    const auto rcc = relative_cochain_complex(inst.complex, inst.decomposition());
    const auto ds = deformed_coboundary(rcc, simplex_potential(inst.complex, rcc), 1.0);
    const auto lap = assemble_laplacian(ds, unit_weights(rcc), 1, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(lanczos_lowest(lap.matrix, 6, 1e-10).front());
}
BENCHMARK(BM_LanczosLowest)->Arg(32)->Arg(64);

void BM_OscillatorEigen(benchmark::State& state) {
    OscillatorSpec spec;
    spec.s = 10.0;
    spec.length = 3.0;
    spec.grid = static_cast<int>(state.range(0));
    spec.bc = OscBoundaryCondition::Neumann;
    for (auto _ : state) benchmark::DoNotOptimize(oscillator_eigenvalues(spec, 5).front());
}
BENCHMARK(BM_OscillatorEigen)->Arg(1000)->Arg(4000);

void BM_CylinderTrace(benchmark::State& state) {
    CylinderModelSpec spec;
    spec.cls = CylinderClass::APlus;
    spec.base_spectrum_k = circle_spectrum(2.0 * 3.14159265358979323846, 9);
    spec.base_spectrum_km1 = spec.base_spectrum_k;
    spec.k = 1;
    spec.s = static_cast<double>(state.range(0));
    spec.phi = CountingFunction::gaussian(4.0);
    for (auto _ : state) benchmark::DoNotOptimize(cylinder_trace(spec));
}
BENCHMARK(BM_CylinderTrace)->Arg(10)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
