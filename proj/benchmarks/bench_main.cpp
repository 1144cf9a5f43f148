// Microbenchmarks for the hot paths: the entropy kernel, single working-point
// reports, coarse violation-domain scans, and the hidden-variable check.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "legwork/entropy.hpp"
#include "legwork/hidden_variable.hpp"
#include "legwork/lg.hpp"

namespace {

using namespace legwork;

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd random_simplex(std::mt19937_64& eng, Eigen::Index n) {
  std::exponential_distribution<double> exp1(1.0);
  Eigen::VectorXd p(n);
  for (Eigen::Index i = 0; i < n; ++i) p(i) = exp1(eng);
  p /= p.sum();
  return p;
}

void bm_tsallis_entropy(benchmark::State& state) {
  const auto alpha = EntropicOrder(static_cast<double>(state.range(1)));
  std::mt19937_64 eng(42);
  const ProbVector p{random_simplex(eng, static_cast<Eigen::Index>(state.range(0)))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsallis_entropy(p, alpha));
  }
}
BENCHMARK(bm_tsallis_entropy)
    ->ArgsProduct({{4, 16, 64, 256}, {1, 2}});

void bm_lg_report(benchmark::State& state) {
  const SystemKind kind =
      state.range(0) == 2 ? SystemKind::qubit : SystemKind::qutrit;
  const ProtocolSpec spec = make_protocol({kind, 0.15 * kPi, 5.0});
  const EntropicOrder alpha(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lg_report(spec, alpha));
  }
}
BENCHMARK(bm_lg_report)->Arg(2)->Arg(3);

void bm_violation_domain(benchmark::State& state) {
  const ThetaGrid grid{static_cast<std::size_t>(state.range(0))};
  const EntropicOrder alpha(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        violation_domain(SystemKind::qubit, 1.0, alpha, grid, 1e-12));
  }
}
BENCHMARK(bm_violation_domain)->Arg(101)->Arg(501);

void bm_lg_check(benchmark::State& state) {
  const HiddenVariableModel model = random_model(
      derive_seed(1, 0), static_cast<Eigen::Index>(state.range(0)),
      static_cast<Eigen::Index>(state.range(1)));
  const EntropicOrder alpha(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lg_check(model, alpha));
  }
}
BENCHMARK(bm_lg_check)->ArgsProduct({{2, 3}, {2, 8}});

}  // namespace

BENCHMARK_MAIN();
