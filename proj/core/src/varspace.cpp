#include "graphideal/varspace.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "graphideal/errors.hpp"

namespace graphideal {

VariableSpace VariableSpace::for_graph(const Graph& g) {
  VariableSpace s;
  s.edges_ = g.edges();
  s.vertices_ = g.vertices();
  s.t_precedence_.resize(s.edges_.size());
  for (std::size_t i = 0; i < s.edges_.size(); ++i)
    s.t_precedence_[i] = static_cast<VarIndex>(i);
  return s;
}

VariableSpace VariableSpace::for_graph(const Graph& g,
                                       const std::vector<Edge>& t_precedence) {
  VariableSpace s = for_graph(g);
  if (t_precedence.size() != s.edges_.size())
    throw ValidationError("edge order must list every edge exactly once");
  s.t_precedence_.clear();
  std::vector<bool> seen(s.edges_.size(), false);
  for (Edge e : t_precedence) {
    if (e.first > e.second) std::swap(e.first, e.second);
    int idx = g.edge_index(e);
    if (idx < 0)
      throw ValidationError("edge order names a non-edge (" +
                            std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    if (seen[idx])
      throw ValidationError("edge order repeats edge (" +
                            std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    seen[idx] = true;
    s.t_precedence_.push_back(idx);
  }
  return s;
}

VarIndex VariableSpace::t_var(int edge_index) const {
  if (edge_index < 0 || edge_index >= num_edges())
    throw PreconditionError("edge index out of range");
  return edge_index;
}

VarIndex VariableSpace::t_var(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw PreconditionError("no edge variable for (" +
                            std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
  return static_cast<VarIndex>(it - edges_.begin());
}

VarIndex VariableSpace::x_var(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw PreconditionError("no vertex variable for " + std::to_string(v));
  return num_edges() + static_cast<VarIndex>(it - vertices_.begin());
}

Edge VariableSpace::edge_of(VarIndex t) const {
  if (!is_t_var(t)) throw PreconditionError("not an edge variable");
  return edges_[t];
}

std::vector<VarIndex> VariableSpace::xz_precedence() const {
  std::vector<VarIndex> out;
  out.reserve(num_vertices() + 1);
  for (int i = 0; i < num_vertices(); ++i) out.push_back(num_edges() + i);
  out.push_back(z_var());
  return out;
}

MonomialOrder VariableSpace::t_order() const {
  return MonomialOrder::grevlex(t_precedence_);
}

MonomialOrder VariableSpace::elimination_order() const {
  return MonomialOrder::block_elimination(xz_precedence(), t_precedence_);
}

std::string VariableSpace::var_name(VarIndex v) const {
  if (is_t_var(v)) {
    Edge e = edges_[v];
    return "t" + std::to_string(e.first) + "_" + std::to_string(e.second);
  }
  if (v >= num_edges() && v < num_edges() + num_vertices())
    return "x" + std::to_string(vertices_[v - num_edges()]);
  if (v == z_var()) return "z";
  throw PreconditionError("variable index out of range");
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<VarIndex> VariableSpace::var_by_name(std::string_view name) const {
  if (name == "z") return z_var();
  if (name.size() < 2) return std::nullopt;
  if (name[0] == 'x') {
    auto v = parse_int(name.substr(1));
    if (!v) return std::nullopt;
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), *v);
    if (it == vertices_.end() || *it != *v) return std::nullopt;
    return num_edges() + static_cast<VarIndex>(it - vertices_.begin());
  }
  if (name[0] == 't') {
    auto und = name.find('_');
    if (und == std::string_view::npos) return std::nullopt;
    auto a = parse_int(name.substr(1, und - 1));
    auto b = parse_int(name.substr(und + 1));
    if (!a || !b) return std::nullopt;
    Edge e{std::min(*a, *b), std::max(*a, *b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<VarIndex>(it - edges_.begin());
  }
  return std::nullopt;
}

std::string VariableSpace::t_order_description() const {
  std::ostringstream os;
  os << "grevlex(";
  for (std::size_t i = 0; i < t_precedence_.size(); ++i) {
    if (i) os << '>';
    os << var_name(t_precedence_[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace graphideal
