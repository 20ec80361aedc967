#include <benchmark/benchmark.h>

#include "paretocom/generators.hpp"
#include "paretocom/oracle.hpp"
#include "paretocom/polyalgos.hpp"

using namespace paretocom;

namespace {

Committee first_k(int k) {
  std::vector<int> v;
  for (int i = 1; i <= k; ++i) v.push_back(i);
  return Committee(std::move(v));
}

void BM_VerifyBruteforce(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(1);
  const auto p = random_profile(m, 8, m / 2, 0, rng);
  const auto ext = static_cast<Extension>(state.range(1));
  const auto w = first_k(m / 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bruteforce(p, ext, w));
  state.SetLabel(std::string(to_string(ext)));
}
BENCHMARK(BM_VerifyBruteforce)->ArgsProduct({{8, 12, 16}, {0, 1, 2, 3, 4}});

void BM_WorstVerify(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(2);
  const auto p = random_profile(m, static_cast<int>(state.range(1)), m / 2, 0, rng);
  const auto w = first_k(m / 2);
  for (auto _ : state) benchmark::DoNotOptimize(worst_verify(p, w));
}
BENCHMARK(BM_WorstVerify)->ArgsProduct({{16, 64, 256}, {16, 256}});

void BM_RsTopwidthTwo(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(3);
  const auto p = random_dichotomous_tw2(m, static_cast<int>(state.range(1)), m / 4, rng);
  const auto w = first_k(m / 4);
  for (auto _ : state) benchmark::DoNotOptimize(rs_improve_dichotomous_tw2(p, w));
}
BENCHMARK(BM_RsTopwidthTwo)->ArgsProduct({{16, 64, 256}, {16, 256}});

}  // namespace

BENCHMARK_MAIN();
