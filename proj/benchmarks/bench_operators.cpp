#include <benchmark/benchmark.h>

#include "coag/linop.hpp"
#include "coag/operators.hpp"
#include "coag/solver.hpp"

using namespace coag;

namespace {

QuadratureGrid grid_n(int n) { return make_log_grid(1e-8, 1e6, n, -0.3, 1.7); }

}  // namespace

static void BM_OpA(benchmark::State& state) {
  const auto g = grid_n(static_cast<int>(state.range(0)));
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op_A(fbar));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OpA)->RangeMultiplier(2)->Range(150, 1200)->Complexity();

static void BM_OpB2(benchmark::State& state) {
  const auto g = grid_n(static_cast<int>(state.range(0)));
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op_B2(fbar, fbar));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OpB2)->RangeMultiplier(2)->Range(150, 1200)->Complexity();

static void BM_OpBW(benchmark::State& state) {
  const auto g = grid_n(300);
  const KernelSpec spec = KernelSpec::power_law(1.0 / 3.0);
  const KernelQuadrature kq = make_kernel_quadrature(
      spec, 1e-10, 1e6, static_cast<int>(state.range(0)));
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op_BW(fbar, fbar, kq));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OpBW)->RangeMultiplier(2)->Range(80, 320)->Complexity();

static void BM_LLinvRoundTrip(benchmark::State& state) {
  const auto g = grid_n(static_cast<int>(state.range(0)));
  const LaplaceProfile fbar = make_fbar_profile(0.7, g);
  const LaplaceProfile H = op_B2(fbar, fbar);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_LL(apply_LLinv(H, 0.15, 0.35)));
  }
}
BENCHMARK(BM_LLinvRoundTrip)->Arg(300)->Arg(600);

static void BM_SolveEps002(benchmark::State& state) {
  SolverConfig cfg;
  cfg.rho = 0.7;
  cfg.alpha = 1.0 / 3.0;
  cfg.epsilon = 0.02;
  cfg.q_nodes = static_cast<int>(state.range(0));
  cfg.k_nodes = 160;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_profile(cfg));
  }
}
BENCHMARK(BM_SolveEps002)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
