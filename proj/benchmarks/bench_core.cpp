#include <benchmark/benchmark.h>

#include "gft/gft.hpp"

namespace {

using namespace gft;

Problem disks3() {
  return Problem(Dynamics::euclidean_ball,
                 {Target(Ball{Vec{-2.0, 0.0}, 1.0}), Target(Ball{Vec{0.0, 2.0}, 1.0}),
                  Target(Ball{Vec{2.0, 0.0}, 1.0})});
}

Problem squares5_boxdyn() {
  return Problem(Dynamics::unit_box,
                 {Target(Box{Vec{-1.0, 0.0}, 0.25}), Target(Box{Vec{-1.0, 1.0}, 0.25}),
                  Target(Box{Vec{0.0, 2.0}, 0.25}), Target(Box{Vec{1.0, 1.0}, 0.25}),
                  Target(Box{Vec{1.0, 0.0}, 0.25})});
}

void BM_SubgradientStep(benchmark::State& state) {
  const Problem p = disks3();
  const Vec x{0.3, 0.7};
  for (auto _ : state) {
    Vec g(2);
    for (const Target& t : p.targets())
      g += mt_subgradient(p.dynamics(), t, x).vector;
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_SubgradientStep);

void BM_SolveHarmonic(benchmark::State& state) {
  const Problem p = disks3();
  SolveOptions opt;
  opt.max_iters = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const SolveResult r = solve(p, Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
    benchmark::DoNotOptimize(r.best_value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolveHarmonic)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SolveUnitBox(benchmark::State& state) {
  const Problem p = squares5_boxdyn();
  SolveOptions opt;
  opt.max_iters = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const SolveResult r = solve(p, Vec{1.0, 1.0}, StepSchedule::harmonic(), opt);
    benchmark::DoNotOptimize(r.best_value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolveUnitBox)->Arg(10000);

void BM_OracleCoarsePass(benchmark::State& state) {
  const Problem p = disks3();
  const BBox box{Vec{-4.0, -4.0}, Vec{4.0, 4.0}};
  for (auto _ : state) {
    const OracleResult r = grid_minimize(p, box, static_cast<std::size_t>(state.range(0)), 0);
    benchmark::DoNotOptimize(r.min_value);
  }
}
BENCHMARK(BM_OracleCoarsePass)->Arg(100)->Arg(200);

void BM_CertificateCheck(benchmark::State& state) {
  const Problem p = disks3();
  const Vec x{0.0, 1.0};
  for (auto _ : state) {
    const Certificate c = certificate_check(p, x, 1e-6);
    benchmark::DoNotOptimize(c.residual);
  }
}
BENCHMARK(BM_CertificateCheck);

}  // namespace

BENCHMARK_MAIN();
