#include <benchmark/benchmark.h>

#include "skewroos/bounds.hpp"
#include "skewroos/distance.hpp"
#include "support/towers.hpp"

using namespace skewroos;

namespace {

const SkewCyclicCode& code_12_6() {
  static const auto tw = testing::example_12_6_tower();
  static const auto code = SkewCyclicCode::from_set(tw, tw->e()->exp(5), DefiningSet(12, 6, {2, 3, 4, 8, 9, 10}));
  return code;
}

const SkewCyclicCode& code_20_8() {
  static const auto tw = testing::conway_tower(2, 5, 4);
  static const auto code = SkewCyclicCode::from_set(tw, tw->e()->exp(11),
                                                    DefiningSet(20, 5, {1, 2, 3, 6, 7, 8, 11, 12, 13, 16, 17, 18}));
  return code;
}

void BM_HammingSearch(benchmark::State& state) {
  const auto& code = state.range(0) == 0 ? code_12_6() : code_20_8();
  DistanceOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(min_hamming_distance(code, opts).d_h);
}
BENCHMARK(BM_HammingSearch)->Args({0, 1})->Args({1, 1})->Args({1, 2})->Unit(benchmark::kMillisecond);

void BM_RankSearch(benchmark::State& state) {
  const auto& code = state.range(0) == 0 ? code_12_6() : code_20_8();
  for (auto _ : state) benchmark::DoNotOptimize(min_rank_distance(code).d_r);
}
BENCHMARK(BM_RankSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SearchRoos(benchmark::State& state) {
  const DefiningSet t = mu_closure(DefiningSet(77, 11, {0, 1, 2, 3, 5, 6}));
  for (auto _ : state) benchmark::DoNotOptimize(search_roos(t).value());
}
BENCHMARK(BM_SearchRoos)->Unit(benchmark::kMillisecond);

}  // namespace
