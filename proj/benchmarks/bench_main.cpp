#include <benchmark/benchmark.h>

#include <random>

#include "maxplus/maxplus.hpp"

namespace {

using namespace maxplus;

std::vector<double> random_reals(std::mt19937_64& rng, std::size_t n, double lo,
                                 double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = dist(rng);
  return out;
}

Matrix random_pdiagable(std::size_t n) {
  std::mt19937_64 rng(n);
  const auto d = random_reals(rng, n, -5, 5);
  const auto p = random_reals(rng, n, -10, 10);
  return conjugate(Matrix::pdiag(d), GenPermMatrix::diagonal(p));
}

Matrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(n + 17);
  std::uniform_real_distribution<double> dist(-10, 10);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

// Worst case for the verifier: a yes-instance runs every K and T check.
void BM_CheckPdiag(benchmark::State& state) {
  const Matrix a = random_pdiagable(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_pdiag(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckPdiag)->RangeMultiplier(2)->Range(8, 512)->Complexity(benchmark::oNSquared);

// Brute-force identity a_ik + a_kj = a_ij (0 on the diagonal) over all
// triples, for contrast with the O(n^2) verifier.
void BM_CheckPdiagTriples(benchmark::State& state) {
  const Matrix a = random_pdiagable(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = a.rows();
  for (auto _ : state) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          const double lhs = a(i, k).value() + a(k, j).value();
          const double rhs = i == j ? 0.0 : a(i, j).value();
          ok &= std::abs(lhs - rhs) <= 1e-9;
        }
    benchmark::DoNotOptimize(ok);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CheckPdiagTriples)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_MaxCycleMean(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_cycle_mean(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCycleMean)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_PdiagPowerClosedForm(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto d = random_reals(rng, static_cast<std::size_t>(state.range(0)), -5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pdiag_power(d, 12));
}
BENCHMARK(BM_PdiagPowerClosedForm)->RangeMultiplier(2)->Range(8, 128);

void BM_PdiagPowerIterated(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Matrix a = Matrix::pdiag(random_reals(rng, static_cast<std::size_t>(state.range(0)), -5, 5));
  for (auto _ : state) benchmark::DoNotOptimize(power(a, 12));
}
BENCHMARK(BM_PdiagPowerIterated)->RangeMultiplier(2)->Range(8, 128);

void BM_Eigenbasis(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenbasis(a));
}
BENCHMARK(BM_Eigenbasis)->RangeMultiplier(2)->Range(8, 64);

void BM_PdiagableEig(benchmark::State& state) {
  const Matrix a = random_pdiagable(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pdiagable_eig(a));
}
BENCHMARK(BM_PdiagableEig)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
