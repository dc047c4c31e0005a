#include <benchmark/benchmark.h>

#include <random>

#include "cogirth/cocircuits.hpp"
#include "cogirth/verify.hpp"

using namespace cogirth;

namespace {

GfMatrix random_matrix(const Gf& f, int r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GfMatrix m(f, r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, static_cast<int>(rng() % f.q()));
  return m;
}

}  // namespace

// The row-space scan is the hot kernel: q^r / (q-1) codeword classes.
static void BM_RowSpaceScanGF2(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  Gf f(2);
  GfMatrix m = random_matrix(f, r, 64, 7);
  std::vector<std::int64_t> w(64, 1);
  RowSpaceScan scan(m, w);
  for (auto _ : state) {
    auto res = scan.min_weight_support_range(0, scan.class_count());
    benchmark::DoNotOptimize(res.weight);
  }
  state.SetItemsProcessed(state.iterations() * scan.class_count());
}
BENCHMARK(BM_RowSpaceScanGF2)->Arg(12)->Arg(16)->Arg(20);

static void BM_RowSpaceScanGF3(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  Gf f(3);
  GfMatrix m = random_matrix(f, r, 32, 7);
  std::vector<std::int64_t> w(32, 2);
  RowSpaceScan scan(m, w);
  for (auto _ : state) {
    auto res = scan.min_weight_support_range(0, scan.class_count());
    benchmark::DoNotOptimize(res.weight);
  }
  state.SetItemsProcessed(state.iterations() * scan.class_count());
}
BENCHMARK(BM_RowSpaceScanGF3)->Arg(8)->Arg(10)->Arg(12);

static void BM_CogirthPgMinusPoint(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  Gf f(2);
  auto m = from_points(f, bose_burton(r, 1, f).points);
  for (auto _ : state) {
    auto res = weighted_cogirth(m, 1);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_CogirthPgMinusPoint)->Arg(4)->Arg(6)->Arg(8);

static void BM_CogirthOracle(benchmark::State& state) {
  Gf f(2);
  auto m = from_points(f, bose_burton(4, 1, f).points);
  for (auto _ : state) {
    auto v = cogirth_oracle(m);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_CogirthOracle);

static void BM_MainCheck(benchmark::State& state) {
  auto ex = worked_example(ExamplePhase::after);
  MainCheckOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    auto rep = check_main_theorem(ex.matroid, opts);
    benchmark::DoNotOptimize(rep.equality);
  }
}
BENCHMARK(BM_MainCheck);

static void BM_ExhaustiveScanPg32(benchmark::State& state) {
  ScanSpec spec;
  spec.q = 2;
  spec.r = 3;
  spec.threads = 1;
  for (auto _ : state) {
    auto rep = scan(spec);
    benchmark::DoNotOptimize(rep.instances);
  }
}
BENCHMARK(BM_ExhaustiveScanPg32);

BENCHMARK_MAIN();
