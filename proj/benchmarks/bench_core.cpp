#include <benchmark/benchmark.h>

#include <random>

#include "nilspec/lie.hpp"
#include "nilspec/linalg.hpp"
#include "nilspec/multilinear.hpp"
#include "nilspec/spectra.hpp"

using namespace nilspec;

namespace {

QMat random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-5, 5);
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_CharPoly(benchmark::State& state) {
  const QMat m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->DenseRange(4, 16, 4);

void BM_ExteriorPower(benchmark::State& state) {
  const QMat m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  const auto l = static_cast<std::size_t>(state.range(0) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_power(m, l));
}
BENCHMARK(BM_ExteriorPower)->DenseRange(4, 8, 2);

void BM_IsExpanding(benchmark::State& state) {
  // roots 2..n+1: fully certified path
  std::vector<Rat> roots;
  for (long r = 2; r < state.range(0) + 2; ++r) roots.push_back(r);
  const Poly p = Poly::from_roots(roots);
  for (auto _ : state) benchmark::DoNotOptimize(is_expanding_poly(p));
}
BENCHMARK(BM_IsExpanding)->DenseRange(4, 20, 4);

void BM_CECohomology(benchmark::State& state) {
  const auto g = LieAlgebra::filiform(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti(g));
}
BENCHMARK(BM_CECohomology)->DenseRange(4, 7, 1);

void BM_CertifyHeisenberg5(benchmark::State& state) {
  QMat a(5, 5);
  const long d[] = {2, 2, 3, 3, 6};
  for (std::size_t i = 0; i < 5; ++i) a(i, i) = d[i];
  const auto aut = check_automorphism(LieAlgebra::heisenberg(2), a);
  for (auto _ : state) benchmark::DoNotOptimize(certify_expanding_on_cohomology(aut));
}
BENCHMARK(BM_CertifyHeisenberg5);

}  // namespace

BENCHMARK_MAIN();
