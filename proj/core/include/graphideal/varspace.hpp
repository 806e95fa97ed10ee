#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphideal/graph.hpp"
#include "graphideal/monomial.hpp"
#include "graphideal/order.hpp"

namespace graphideal {

/// Variable bookkeeping for one graph: an edge variable t<i>_<j> per edge
/// (index 0..|E|-1 in canonical edge order), a vertex variable x<i> per
/// vertex, and a single auxiliary z, in that index order.
///
/// Orders derived here:
///   - t_order(): grevlex on the edge variables. The precedence defaults to
///     the canonical edge order and can be overridden by a permutation.
///   - elimination_order(): {x variables, then z} as the front block over the
///     edge variables, grevlex within each block; x variables rank by vertex
///     id, z last in its block.
class VariableSpace {
 public:
  static VariableSpace for_graph(const Graph& g);
  static VariableSpace for_graph(const Graph& g, const std::vector<Edge>& t_precedence);

  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_vars() const { return num_edges() + num_vertices() + 1; }

  VarIndex t_var(int edge_index) const;
  VarIndex t_var(const Edge& e) const;
  VarIndex x_var(Vertex v) const;
  VarIndex z_var() const { return num_edges() + num_vertices(); }
  bool is_t_var(VarIndex v) const { return v >= 0 && v < num_edges(); }
  Edge edge_of(VarIndex t) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Edge-variable precedence (greatest first).
  const std::vector<VarIndex>& t_precedence() const { return t_precedence_; }
  std::vector<VarIndex> xz_precedence() const;

  MonomialOrder t_order() const;
  MonomialOrder elimination_order() const;

  std::string var_name(VarIndex v) const;
  std::optional<VarIndex> var_by_name(std::string_view name) const;
  /// E.g. "grevlex(t1_2>t2_3>t1_3)".
  std::string t_order_description() const;

  bool operator==(const VariableSpace& o) const {
    return edges_ == o.edges_ && vertices_ == o.vertices_ &&
           t_precedence_ == o.t_precedence_;
  }

 private:
  std::vector<Edge> edges_;        // canonical order
  std::vector<Vertex> vertices_;   // sorted
  std::vector<VarIndex> t_precedence_;
};

}  // namespace graphideal
