#include <benchmark/benchmark.h>

#include "rbcat/circuits.hpp"
#include "rbcat/diagonal.hpp"
#include "rbcat/martingale.hpp"
#include "rbcat/zoo.hpp"

using namespace rbcat;

static void BM_TruthTableHistogram(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto s = static_cast<unsigned>(state.range(1));
  const BitString sigma = BitString::parse("0110100110010110");
  for (auto _ : state) benchmark::DoNotOptimize(table_histogram(n, s, sigma).total());
  state.counters["circuits"] = static_cast<double>(circuit_count(n, s));
}
BENCHMARK(BM_TruthTableHistogram)->Args({2, 3})->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_BruteForceReplay(benchmark::State& state) {
  const BitString sigma = BitString::parse("0110");
  const auto h = table_histogram(2, 3, sigma);
  ConstraintSet z;
  const auto inputs = all_inputs(2);
  const auto steps = diagonalize_tables(h, inputs, z);
  for (auto _ : state) benchmark::DoNotOptimize(replay_brute_force(2, 3, sigma, steps));
}
BENCHMARK(BM_BruteForceReplay)->Unit(benchmark::kMillisecond);

static void BM_ChiPrefixSparse(benchmark::State& state) {
  const Language l = make_sparse(Polynomial::parse("1,1"), 3);
  for (auto _ : state) benchmark::DoNotOptimize(chi_prefix(l, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ChiPrefixSparse)->Arg(1 << 10)->Arg(1 << 14);

static void BM_DiagGlobalMembership(benchmark::State& state) {
  const Language l = diag_language_global(singleton_family());
  Natural rank = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(l.contains(rank_to_string(rank)));
    rank = (rank + 97) % (Natural{1} << 12);
  }
}
BENCHMARK(BM_DiagGlobalMembership);

static void BM_DiagLocalMembership(benchmark::State& state) {
  const LocalConstructor h = complement_prefix_family();
  const auto layout = local_diag_layout(h, 4);
  const Language l = diag_language_local(h, layout);
  Natural rank = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(l.contains(rank_to_string(rank)));
    rank = (rank + 13) % layout.ends.back();
  }
}
BENCHMARK(BM_DiagLocalMembership);

static void BM_FairnessCheck(benchmark::State& state) {
  const Martingale d = density_bettor();
  for (auto _ : state) benchmark::DoNotOptimize(fairness_check(d, static_cast<unsigned>(state.range(0))).pass);
}
BENCHMARK(BM_FairnessCheck)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
