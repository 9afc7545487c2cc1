#include <benchmark/benchmark.h>

#include "lrb/arrangement.hpp"
#include "lrb/library.hpp"
#include "lrb/linalg.hpp"
#include "lrb/partition.hpp"
#include "lrb/spectral.hpp"

using namespace lrb;

namespace {

void BM_FaceEnumerationBraid(benchmark::State& state) {
  for (auto _ : state) {
    RealArrangement a = RealArrangement::braid(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(a.faces().size());
  }
}
BENCHMARK(BM_FaceEnumerationBraid)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Charpoly(benchmark::State& state) {
  LrbSemigroup s = braid_face_semigroup(static_cast<int>(state.range(0)));
  std::map<std::string, Rational> w;
  int k = 1;
  for (const auto& label : s.labels()) w[label] = Rational(1, 2 * ++k);
  Rational total = 0;
  for (auto& [l, v] : w) total += v;
  for (auto& [l, v] : w) v /= total;
  TransitionMatrix tm = transition_matrix(s, WeightDistribution(w));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(tm.rows));
}
BENCHMARK(BM_Charpoly)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LibraryFiber(benchmark::State& state) {
  SetPartition classes = SetPartition::parse("12|34");
  for (auto _ : state) benchmark::DoNotOptimize(library_fiber(classes).size());
}
BENCHMARK(BM_LibraryFiber)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  LrbSemigroup s = braid_face_semigroup(3);
  auto w = WeightDistribution(tsetlin_distribution(
      3, {{1, Rational(1, 2)}, {2, Rational(1, 3)}, {3, Rational(1, 6)}}));
  TransitionMatrix tm = transition_matrix(s, w);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate(tm, "1|2|3", state.range(0), 7).final_state);
}
BENCHMARK(BM_Simulate)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
