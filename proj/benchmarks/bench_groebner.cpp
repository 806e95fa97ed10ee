// Microbenchmarks for the algebra pipeline: generator construction, the
// elimination-order Buchberger run, and downstream Hilbert/regularity work.
// Calls buchberger/eliminate directly so the per-graph cache stays out of the
// measurement.

#include <benchmark/benchmark.h>

#include "graphideal/groebner.hpp"
#include "graphideal/invariants.hpp"

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

GroebnerBasis edge_basis(const Graph& g, std::uint32_t p) {
  PrimeField F(p);
  VariableSpace space = VariableSpace::for_graph(g);
  GroebnerBasis full = buchberger(build_extended_generators(g, space, F),
                                  space.elimination_order(), F, space);
  return eliminate(full);
}

void bm_extended_generators(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  VariableSpace space = VariableSpace::for_graph(g);
  PrimeField F(3);
  for (auto _ : state) benchmark::DoNotOptimize(build_extended_generators(g, space, F));
}
BENCHMARK(bm_extended_generators)->Arg(6)->Arg(10);

void bm_elimination_cycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_basis(g, 3));
}
BENCHMARK(bm_elimination_cycle)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_elimination_k23(benchmark::State& state) {
  Graph g = complete_bipartite(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(edge_basis(g, 3));
}
BENCHMARK(bm_elimination_k23)->Unit(benchmark::kMillisecond);

void bm_elimination_prime(benchmark::State& state) {
  Graph g = cycle(6);
  for (auto _ : state) benchmark::DoNotOptimize(edge_basis(g, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(bm_elimination_prime)->Arg(3)->Arg(5)->Arg(7)->Arg(31)->Unit(benchmark::kMillisecond);

void bm_normal_form(benchmark::State& state) {
  Graph g = cycle(8);
  GroebnerBasis gb = edge_basis(g, 3);
  // a dense-ish probe: product of every edge variable
  std::vector<std::pair<VarIndex, int>> factors;
  for (int e = 0; e < 8; ++e) factors.push_back({gb.space.t_var(e), 2});
  Polynomial f = Polynomial::make({{1, Monomial::from_factors(factors)}}, gb.field, gb.order);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, gb));
}
BENCHMARK(bm_normal_form);

void bm_hilbert_regularity(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  GroebnerBasis gb = edge_basis(g, 3);
  for (auto _ : state) {
    int reg = regularity(gb, g);
    benchmark::DoNotOptimize(reg);
  }
}
BENCHMARK(bm_hilbert_regularity)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
