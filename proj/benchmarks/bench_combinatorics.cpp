// Microbenchmarks for the graph-side searches: join maximization, ear
// decomposition search, and the nested-decomposition backtracker.

#include <benchmark/benchmark.h>

#include "graphideal/combinatorics.hpp"
#include "graphideal/graph.hpp"

using namespace graphideal;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph::from_edges(edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) edges.push_back({i, j});
  return Graph::from_edges(edges);
}

// theta graph: three internally disjoint paths of the given lengths between
// two hubs; same-parity lengths keep it bipartite
Graph theta(int a, int b, int c) {
  std::vector<Edge> edges;
  int next = 3;
  for (int len : {a, b, c}) {
    int prev = 1;
    for (int i = 1; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 2});
  }
  return Graph::from_edges(edges);
}

void bm_cycle_enumeration(benchmark::State& state) {
  Graph g = complete_bipartite(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_cycles(g));
}
BENCHMARK(bm_cycle_enumeration)->Arg(3)->Arg(4);

void bm_max_join(benchmark::State& state) {
  Graph g = complete_bipartite(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_join(g));
}
BENCHMARK(bm_max_join)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_max_join_cycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_join(g));
}
BENCHMARK(bm_max_join_cycle)->Arg(10)->Arg(14);

void bm_min_even_ears(benchmark::State& state) {
  Graph g = complete_bipartite(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_even_ears(g));
}
BENCHMARK(bm_min_even_ears)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_nested_search(benchmark::State& state) {
  Graph g = theta(static_cast<int>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(search_nested_decomposition(g));
}
BENCHMARK(bm_nested_search)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
