#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphideal {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

/// Finite simple undirected graph: no loops, no parallel edges, no isolated
/// vertices (the vertex set is exactly the union of edge endpoints).
/// Edges are kept sorted lexicographically; that canonical order fixes the
/// default variable order used by everything downstream.
class Graph {
 public:
  static Graph from_edges(std::vector<Edge> edges);
  /// As above, but checks that the explicit vertex list matches the union of
  /// endpoints exactly (a listed vertex on no edge is an isolated vertex).
  static Graph from_edges(std::vector<Edge> edges, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  /// Index of an edge in the canonical (sorted) edge list, -1 if absent.
  int edge_index(Vertex a, Vertex b) const;
  int edge_index(const Edge& e) const { return edge_index(e.first, e.second); }

  bool operator==(const Graph& o) const { return edges_ == o.edges_; }
  /// Canonical one-line serialization, usable as a cache key.
  std::string key() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::vector<Vertex>> adjacency_;
};

/// Accepts either a JSON object {"vertices": [...]?, "edges": [[i,j],...]} or
/// plain text with one "i j" pair per line ('#' starts a comment).
Graph parse_graph(std::string_view text);

struct Cycle {
  std::vector<Edge> edge_set;            // sorted
  std::vector<Vertex> vertex_sequence;   // closed walk; first vertex not repeated
  int length() const { return static_cast<int>(edge_set.size()); }
};

struct ComponentLabeling {
  int count = 0;
  std::map<Vertex, int> label;  // component ids 0..count-1 by smallest vertex
};

ComponentLabeling connected_components(const Graph& g);

struct BipartiteResult {
  bool bipartite = false;
  /// Two sorted colour classes (the class of each component's smallest vertex
  /// goes first); present iff bipartite.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> partition;
  /// A simple odd cycle; present iff not bipartite.
  std::optional<Cycle> odd_cycle;
};

BipartiteResult is_bipartite(const Graph& g);

/// All simple cycles, each exactly once (up to rotation and reflection), in a
/// deterministic order: anchored at their smallest vertex, then by the
/// lexicographically least traversal. Throws ResourceLimitError past `cap`.
std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap = 1000000);

struct BlockDecomposition {
  std::vector<std::vector<Edge>> blocks;  // edge sets; bridges are singletons
};

/// Biconnected components (blocks); the blocks partition the edge set.
BlockDecomposition biconnected_blocks(const Graph& g);

/// Connected, at least 3 vertices, and a single block.
bool is_biconnected(const Graph& g);

/// Spanning subgraph H with b0(H) = b0(G) and H bipartite iff G is: spanning
/// forests everywhere, plus one extra edge closing a single odd cycle inside
/// the first non-bipartite component when G is not bipartite.
Graph upper_bound_witness(const Graph& g);

}  // namespace graphideal
