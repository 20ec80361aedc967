#include <benchmark/benchmark.h>

#include <random>

#include "paretocom/graph.hpp"

using namespace paretocom;

namespace {

BipartiteGraph random_graph(int side, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<int> left, right;
  for (int i = 0; i < side; ++i) {
    left.push_back(i);
    right.push_back(side + i);
  }
  std::vector<BipartiteGraph::Edge> edges;
  for (int u : left)
    for (int v : right)
      if (coin(rng)) edges.emplace_back(u, v);
  return BipartiteGraph(left, right, edges);
}

void BM_MaxMatching(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 4.0 / static_cast<double>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
  state.SetComplexityN(static_cast<std::int64_t>(g.edges().size()));
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_MinVertexCover(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 4.0 / static_cast<double>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(min_vertex_cover(g));
}
BENCHMARK(BM_MinVertexCover)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
