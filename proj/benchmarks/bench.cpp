#include <benchmark/benchmark.h>

#include "ekr/containers.hpp"
#include "ekr/harness.hpp"
#include "ekr/indep.hpp"
#include "ekr/kneser.hpp"
#include "ekr/random.hpp"

namespace {

void BM_Materialize(benchmark::State& state) {
  ekr::KneserParams kp = ekr::kneser_params(12, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ekr::materialize(kp));
}
BENCHMARK(BM_Materialize)->Arg(3)->Arg(5);

void BM_SampleRanks(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ekr::sample_ranks(705432, 1e-3, 42));  // C(24,8)
}
BENCHMARK(BM_SampleRanks);

void BM_ExactMIS(benchmark::State& state) {
  auto ranks = ekr::sample_ranks(220, 0.8, 7);
  ekr::ExplicitGraph g = ekr::induced_subgraph(ranks, 12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ekr::max_independent_set(g, {}));
}
BENCHMARK(BM_ExactMIS);

void BM_Trial(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ekr::run_trial(12, 3, 0.5, seed++));
}
BENCHMARK(BM_Trial);

void BM_Fingerprint(benchmark::State& state) {
  ekr::ExplicitGraph g = ekr::materialize(ekr::kneser_params(7, 3));
  ekr::ISResult mis = ekr::max_independent_set(g, {});
  ekr::ContainerConfig cfg{ekr::Rational(1, 4), 3, mis.size};
  for (auto _ : state) benchmark::DoNotOptimize(ekr::fingerprint(g, mis.witness, cfg));
}
BENCHMARK(BM_Fingerprint);

}  // namespace

BENCHMARK_MAIN();
