#include <benchmark/benchmark.h>

#include <random>

#include "nichols/antisym.hpp"
#include "nichols/braiding.hpp"
#include "nichols/cartan_matrix.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/free_braided.hpp"
#include "nichols/realization.hpp"
#include "nichols/twisting.hpp"

using namespace nichols;

namespace {

BraidingMatrix from_exponents(std::int64_t n, const std::vector<std::vector<std::int64_t>>& alpha) {
  std::vector<std::vector<RootOfUnity>> m;
  for (const auto& row : alpha) {
    std::vector<RootOfUnity> r;
    for (auto a : row) r.emplace_back(a, n);
    m.push_back(std::move(r));
  }
  return BraidingMatrix(std::move(m));
}

CyclotomicMatrix random_matrix(std::size_t n, std::int64_t level, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  CyclotomicMatrix m(n, std::vector<CyclotomicInt>(n, CyclotomicInt::zero(level)));
  for (auto& row : m)
    for (auto& e : row) {
      std::vector<mpz_class> p(static_cast<std::size_t>(level));
      for (auto& x : p) x = coef(rng);
      e = CyclotomicInt::from_powers(level, p);
    }
  return m;
}

void BM_CycRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, state.range(1), 42);
  for (auto _ : state) benchmark::DoNotOptimize(cyc_rank(m));
}
BENCHMARK(BM_CycRank)->Args({8, 3})->Args({16, 3})->Args({16, 5})->Args({24, 7})->Unit(benchmark::kMillisecond);

void BM_AntisymRankA2(benchmark::State& state) {
  const BraidingMatrix b = from_exponents(3, {{1, 1}, {1, 1}});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(antisymmetrizer_rank(b, n));
}
BENCHMARK(BM_AntisymRankA2)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_AntisymRankB2(benchmark::State& state) {
  const BraidingMatrix b = from_exponents(5, {{1, 2}, {1, 2}});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(antisymmetrizer_rank(b, n));
}
BENCHMARK(BM_AntisymRankB2)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_FiniteTypeRank4(benchmark::State& state) {
  const GeneralizedCartanMatrix g({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(is_finite_type(g));
}
BENCHMARK(BM_FiniteTypeRank4);

void BM_ClassifyZp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_zp(state.range(0)));
}
BENCHMARK(BM_ClassifyZp)->Arg(7)->Arg(13)->Arg(37)->Unit(benchmark::kMillisecond);

void BM_SerrePrimitivityG2(benchmark::State& state) {
  const BraidingMatrix b = from_exponents(7, {{1, 3}, {1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(serre_element(b, 0, 1, -3)));
}
BENCHMARK(BM_SerrePrimitivityG2)->Unit(benchmark::kMillisecond);

void BM_Symmetrize(benchmark::State& state) {
  const BraidingMatrix b = from_exponents(7, {{1, 4}, {2, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(b));
}
BENCHMARK(BM_Symmetrize);

}  // namespace

BENCHMARK_MAIN();
