#include <benchmark/benchmark.h>

#include "paretocom/generators.hpp"
#include "paretocom/mechanisms.hpp"
#include "paretocom/polyalgos.hpp"

using namespace paretocom;

namespace {

Profile sample(int m, int n) {
  Rng rng(static_cast<std::uint64_t>(m) * 1000 + static_cast<std::uint64_t>(n));
  return random_profile(m, n, m / 2, 0, rng);
}

void BM_CommitteeSd(benchmark::State& state) {
  const auto p = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto perm = Permutation::identity(p.num_agents());
  for (auto _ : state) benchmark::DoNotOptimize(committee_sd(p, perm));
  state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(BM_CommitteeSd)->ArgsProduct({{16, 64, 256}, {16, 128, 1024}})->Complexity();

void BM_WorstSd(benchmark::State& state) {
  const auto p = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto perm = Permutation::identity(p.num_agents());
  for (auto _ : state) benchmark::DoNotOptimize(worst_sd(p, perm));
}
BENCHMARK(BM_WorstSd)->ArgsProduct({{16, 64, 256}, {16, 128}});

void BM_ScoreElect(benchmark::State& state) {
  const auto p = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rs_score_elect(p));
}
BENCHMARK(BM_ScoreElect)->ArgsProduct({{16, 256}, {16, 1024}});

}  // namespace

BENCHMARK_MAIN();
