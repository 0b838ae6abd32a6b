#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "skewminor/brill.hpp"
#include "skewminor/det_oracle.hpp"
#include "skewminor/pfaffian.hpp"

namespace {

using namespace skewminor;

SkewMatrix random_skew(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  SkewMatrix::Builder b(n, Ring::integers());
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) b.set(i, j, dist(rng));
  }
  return std::move(b).build();
}

IndexSet first_indices(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return IndexSet::from(v);
}

void BM_PfMatchsum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SkewMatrix t = random_skew(n, 1);
  const Word w = first_indices(n).to_word();
  for (auto _ : state) benchmark::DoNotOptimize(pf_matchsum(t, w));
}
BENCHMARK(BM_PfMatchsum)->DenseRange(4, 12, 2);

void BM_PfExpandCold(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SkewMatrix t = random_skew(n, 1);
  const Word w = first_indices(n).to_word();
  for (auto _ : state) benchmark::DoNotOptimize(pf_expand(t, w));
}
BENCHMARK(BM_PfExpandCold)->DenseRange(4, 16, 2);

void BM_PfEliminate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SkewMatrix t = random_skew(n, 1);
  const IndexSet r = first_indices(n);
  for (auto _ : state) benchmark::DoNotOptimize(pf_eliminate(t, r));
}
BENCHMARK(BM_PfEliminate)->RangeMultiplier(2)->Range(4, 64);

// Minor with half-overlapping row and column sets.
void BM_BrillMinor(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const SkewMatrix t = random_skew(static_cast<std::size_t>(2 * m), 2);
  std::vector<int> rows(m), cols(m);
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), m / 2 + 1);
  const IndexSet r = IndexSet::from(rows), s = IndexSet::from(cols);
  for (auto _ : state) benchmark::DoNotOptimize(brill_minor(t, r, s).value);
}
BENCHMARK(BM_BrillMinor)->DenseRange(2, 8, 2);

void BM_BrillMinorDoubling(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const SkewMatrix t = random_skew(static_cast<std::size_t>(2 * m), 2);
  std::vector<int> rows(m), cols(m);
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), m / 2 + 1);
  const IndexSet r = IndexSet::from(rows), s = IndexSet::from(cols);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brill_minor_via_doubling(t, r, s).value);
  }
}
BENCHMARK(BM_BrillMinorDoubling)->DenseRange(2, 6, 2);

void BM_DetBareiss(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0));
  const SkewMatrix t = random_skew(static_cast<std::size_t>(2 * m), 2);
  std::vector<int> rows(m), cols(m);
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), m / 2 + 1);
  const GeneralMatrix sub =
      submatrix(t, IndexSet::from(rows), IndexSet::from(cols));
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(sub));
}
BENCHMARK(BM_DetBareiss)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
