// Microbenchmarks for the inner loops: the discrete operator, the norm
// integrals, single time steps of both schemes, bound evaluation, and state
// sampling.

#include <benchmark/benchmark.h>

#include <mhr/bounds.hpp>
#include <mhr/integrator.hpp>
#include <mhr/monitor.hpp>
#include <mhr/verify.hpp>

namespace {

mhr::Grid grid_for(int dim) {
  switch (dim) {
    case 1: return mhr::make_line(1.0, 4096);
    case 2: return mhr::make_grid({1.0, 1.0}, {64, 64});
    default: return mhr::make_grid({1.0, 1.0, 1.0}, {24, 24, 24});
  }
}

void bm_laplacian(benchmark::State& state) {
  const mhr::Grid g = grid_for(static_cast<int>(state.range(0)));
  const mhr::State s = mhr::sample_smooth_state(g, 1, 1.0);
  mhr::Field out(g.size());
  for (auto _ : state) {
    out = mhr::laplacian_neumann(s.u, g);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(bm_laplacian)->Arg(1)->Arg(2)->Arg(3);

void bm_lp_integral(benchmark::State& state) {
  const mhr::Grid g = mhr::make_line(1.0, 4096);
  const mhr::State s = mhr::sample_smooth_state(g, 2, 1.0);
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhr::lp_integral(s.u, g, p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(bm_lp_integral)->Arg(2)->Arg(4)->Arg(6);

void bm_step(benchmark::State& state) {
  const mhr::Grid g = grid_for(static_cast<int>(state.range(0)));
  const mhr::ModelParameters p;
  mhr::StepperConfig cfg;
  cfg.dt = 0.01;
  cfg.scheme = state.range(1) == 0 ? mhr::DiffusionScheme::BackwardEuler
                                   : mhr::DiffusionScheme::CrankNicolson;
  mhr::State s = mhr::sample_smooth_state(g, 3, 1.0);
  for (auto _ : state) {
    s = mhr::step(s, cfg, p, g);
    benchmark::DoNotOptimize(s.u.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(bm_step)->Args({1, 0})->Args({1, 1})->Args({2, 1})->Args({3, 1});

void bm_monitor_row(benchmark::State& state) {
  const mhr::Grid g = mhr::make_line(1.0, 4096);
  const mhr::ModelParameters p;
  const mhr::State s = mhr::sample_smooth_state(g, 4, 1.0);
  const double c1 = mhr::scaling_c1(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhr::make_monitor_row(s, g, p.eta, c1));
  }
}
BENCHMARK(bm_monitor_row);

void bm_bounds(benchmark::State& state) {
  const mhr::ModelParameters p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhr::compute_bounds(p, 1.0, 3.0, 1.0, 1.0));
  }
}
BENCHMARK(bm_bounds);

void bm_sample(benchmark::State& state) {
  const mhr::Grid g = grid_for(static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mhr::sample_smooth_state(g, ++seed, 1.0));
  }
}
BENCHMARK(bm_sample)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
