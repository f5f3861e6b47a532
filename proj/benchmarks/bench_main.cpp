#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "antikit/closure_opt.hpp"
#include "antikit/feasibility.hpp"
#include "antikit/poset.hpp"
#include "antikit/split_graph.hpp"
#include "antikit/structure.hpp"

using namespace antikit;

namespace {

std::uint32_t below(std::mt19937& rng, std::uint32_t n) { return n == 0 ? 0 : rng() % n; }

SplitGraph random_graph(int n, std::uint32_t edge_percent, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<VertexId> clique, independent;
  for (int v = 1; v <= n / 2; ++v) clique.push_back(v);
  for (int v = n / 2 + 1; v <= n; ++v) independent.push_back(v);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId k : clique) {
    for (VertexId i : independent) {
      if (below(rng, 100) < edge_percent) edges.emplace_back(k, i);
    }
  }
  return SplitGraph::validate(clique, independent, edges);
}

WeightFn random_weights(const SplitGraph& g, std::uint32_t seed) {
  std::mt19937 rng(seed);
  WeightFn w;
  for (VertexId v : g.vertices()) w.set(v, Rational(static_cast<int>(below(rng, 19)) - 9));
  return w;
}

void BM_MaxWeightFeasible(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SplitGraph g = random_graph(n, n > 500 ? 1 : 20, 42);
  WeightFn w = random_weights(g, 43);
  for (auto _ : state) {
    OptResult r = max_weight_feasible(g, w);
    benchmark::DoNotOptimize(r.best_weight);
  }
}
BENCHMARK(BM_MaxWeightFeasible)->Arg(50)->Arg(200)->Arg(1000)->Arg(2000);

void BM_MaxFlowLayered(benchmark::State& state) {
  int width = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    FlowNetwork net(2 * width + 2, 2 * width, 2 * width + 1);
    for (int a = 0; a < width; ++a) {
      net.add_arc(2 * width, a, Rational(3));
      net.add_arc(width + a, 2 * width + 1, Rational(2));
      for (int b = 0; b < width; ++b) net.add_arc(a, width + b, Rational(1));
    }
    state.ResumeTiming();
    MaxFlowResult r = max_flow(net);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_MaxFlowLayered)->Arg(16)->Arg(64);

void BM_EnumerateFeasible(benchmark::State& state) {
  SplitGraph g = random_graph(static_cast<int>(state.range(0)), 30, 7);
  for (auto _ : state) {
    SetFamily fam = enumerate_feasible(g);
    benchmark::DoNotOptimize(fam.size());
  }
}
BENCHMARK(BM_EnumerateFeasible)->Arg(12)->Arg(16)->Arg(18);

void BM_PathPoset(benchmark::State& state) {
  SplitGraph g = random_graph(static_cast<int>(state.range(0)), 5, 11).normalized();
  for (auto _ : state) {
    auto paths = path_poset(g);
    benchmark::DoNotOptimize(paths.size());
  }
}
BENCHMARK(BM_PathPoset)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
