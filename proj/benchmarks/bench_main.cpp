#include <benchmark/benchmark.h>

#include "thinlayer/effective_thickness.hpp"
#include "thinlayer/incompressible.hpp"
#include "thinlayer/poisson.hpp"
#include "thinlayer/quadrature.hpp"
#include "thinlayer/sensitivity.hpp"

using namespace thinlayer;

namespace {

const ParaboloidGap kGap{80.0, 40.0, 0.8};
const LayerSpec kLayer{10.0, 2.0};

EllipticContactSolution base_solution() {
  const LayerSpec layers[] = {kLayer, kLayer};
  return elliptic_contact_solve(aggregate_compliance(layers), kGap);
}

void BM_EllipticSolve(benchmark::State& state) {
  const double ratios[] = {1.0, 0.5, 0.01};
  int k = 0;
  for (auto _ : state) {
    const ParaboloidGap gap{40.0, 40.0 * ratios[k++ % 3], 0.5};
    benchmark::DoNotOptimize(elliptic_contact_solve(0.625, gap).p0);
  }
}
BENCHMARK(BM_EllipticSolve);

void BM_ThetaPoisson(benchmark::State& state) {
  const EllipseDomain d = base_solution().domain;
  const ScalarField one = ScalarField::sample(d, DiskGrid(static_cast<int>(state.range(0))), [](Vec2) { return 1.0; });
  int iterations = 0;
  for (auto _ : state) {
    const PoissonResult r = poisson_solve_dirichlet(d, one);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.solution.values().data());
  }
  state.counters["cg_iterations"] = iterations;
}
BENCHMARK(BM_ThetaPoisson)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_PressureVariation(benchmark::State& state) {
  const Field2 bump = Field2::from_jet([](Vec2 y) {
    const Jet dy1 = Jet::y1(y) - Jet::constant(4.0);
    const Jet dy2 = Jet::y2(y) + Jet::constant(2.0);
    return 0.5 * exp(-(1.0 / 50.0) * (dy1 * dy1 + dy2 * dy2)) - Jet::constant(0.1);
  });
  const SensitivityProblem prob{base_solution(), {{kLayer, bump}, {kLayer, bump}}};
  const DiskGrid grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pressure_variation(prob, grid).solution.values().data());
}
BENCHMARK(BM_PressureVariation)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_PolarQuadrature(benchmark::State& state) {
  const EllipseDomain d = base_solution().domain;
  const PolarRule rule = PolarRule::for_resolution(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_ellipse(d, [&](Vec2 y) { return d.theta(y) * d.theta(y); }, rule));
  }
}
BENCHMARK(BM_PolarQuadrature)->Arg(64)->Arg(256)->Arg(1024);

void BM_CompareWeights(benchmark::State& state) {
  const Field2 H = Field2::from_jet([](Vec2 y) {
    return Jet::constant(2.0) + 0.3 * sin((1.0 / 5.0) * Jet::y1(y)) * cos((1.0 / 7.0) * Jet::y2(y));
  });
  const EllipseDomain d = base_solution().domain;
  for (auto _ : state) benchmark::DoNotOptimize(compare_weights(H, d).entries[0].h_eff);
}
BENCHMARK(BM_CompareWeights)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
