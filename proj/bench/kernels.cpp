#include <benchmark/benchmark.h>

#include "potkit/equilibrium.hpp"
#include "potkit/surface.hpp"
#include "potkit/vortex.hpp"

using namespace potkit;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void torus_green_mean(benchmark::State& state) {
    const TorusSpec spec(cplx(0.0, 2.0));
    const cplx a(0.1, 0.2);
    for (auto _ : state) {
        const auto q = area_quadrature([&](cplx z) { return cplx(torus_green(z, a, spec)); },
                                       spec.cell_centered_at(a), 64, a, mode(state));
        benchmark::DoNotOptimize(q.value);
    }
}

void vortex_velocities(benchmark::State& state) {
    VortexSystem sys;
    sys.domain = VortexDomain::disk(1.0);
    for (int k = 0; k < 200; ++k) {
        sys.positions.push_back(std::polar(0.9 * (k + 1) / 201.0, 2.399963 * k));
        sys.strengths.push_back(k % 2 == 0 ? 1.0 : -0.5);
    }
    for (auto _ : state) benchmark::DoNotOptimize(vortex_field(sys, sys.positions, mode(state)));
}

void fekete_circle(benchmark::State& state) {
    FeketeOptions opt;
    opt.exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(fekete_points(CompactSet::circle(1.0), 48, std::nullopt, opt));
}

}  // namespace

BENCHMARK(torus_green_mean)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(vortex_velocities)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(fekete_circle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
