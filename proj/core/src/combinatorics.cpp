#include "graphideal/combinatorics.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "graphideal/errors.hpp"
#include "graphideal/log.hpp"

namespace graphideal {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

// ---- joins ----

JoinCheckResult is_join(const Graph& g, const std::vector<Edge>& join_edges,
                        std::size_t cycle_cap) {
  std::vector<bool> mask(g.num_edges(), false);
  for (Edge e : join_edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    int idx = g.edge_index(e);
    if (idx < 0)
      throw ValidationError("join edge " + edge_str(e) + " not in the graph");
    if (mask[idx])
      throw ValidationError("join edge " + edge_str(e) + " listed twice");
    mask[idx] = true;
  }
  JoinCheckResult res;
  for (const Cycle& c : enumerate_simple_cycles(g, cycle_cap)) {
    int inside = 0;
    for (const Edge& e : c.edge_set)
      if (mask[g.edge_index(e)]) ++inside;
    if (2 * inside > static_cast<int>(c.edge_set.size())) {
      res.violating_cycle = c;
      return res;
    }
  }
  res.is_join = true;
  return res;
}

MaxJoinResult max_join(const Graph& g, int edge_cap, std::size_t cycle_cap) {
  const int m = g.num_edges();
  if (m > edge_cap)
    throw ResourceLimitError("join search over " + std::to_string(m) +
                             " edges exceeds the cap of " +
                             std::to_string(edge_cap));
  std::vector<Cycle> cycles = enumerate_simple_cycles(g, cycle_cap);
  std::vector<std::vector<int>> cycles_with(m);
  std::vector<int> budget(cycles.size()), tally(cycles.size(), 0);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    budget[c] = static_cast<int>(cycles[c].edge_set.size()) / 2;
    for (const Edge& e : cycles[c].edge_set)
      cycles_with[g.edge_index(e)].push_back(static_cast<int>(c));
  }

  // Include-first branch and bound over the canonical edge sequence; a branch
  // dies once even taking every remaining edge cannot beat the incumbent.
  int best = -1;
  std::vector<bool> chosen(m, false), best_set;
  std::function<void(int, int)> dfs = [&](int idx, int size) {
    if (size + (m - idx) <= best) return;
    if (idx == m) {
      best = size;
      best_set = chosen;
      return;
    }
    bool fits = true;
    for (int c : cycles_with[idx])
      if (tally[c] + 1 > budget[c]) {
        fits = false;
        break;
      }
    if (fits) {
      for (int c : cycles_with[idx]) ++tally[c];
      chosen[idx] = true;
      dfs(idx + 1, size + 1);
      chosen[idx] = false;
      for (int c : cycles_with[idx]) --tally[c];
    }
    dfs(idx + 1, size);
  };
  dfs(0, 0);

  MaxJoinResult res;
  res.mu = best;
  for (int i = 0; i < m; ++i)
    if (best_set[i]) res.witness.edges.push_back(g.edges()[i]);
  for (const Cycle& c : cycles) {
    int inside = 0;
    for (const Edge& e : c.edge_set)
      if (std::binary_search(res.witness.edges.begin(), res.witness.edges.end(), e))
        ++inside;
    res.witness.cycle_checks.emplace_back(inside,
                                          static_cast<int>(c.edge_set.size()));
  }
  return res;
}

// ---- ear decompositions ----

std::vector<Edge> EarPath::edge_list() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    out.emplace_back(std::min(vertices[i], vertices[i + 1]),
                     std::max(vertices[i], vertices[i + 1]));
  return out;
}

EarVerification verify_ear_decomposition(const Graph& g, const EarDecomposition& d) {
  EarVerification out;
  auto flag = [&](const std::string& msg) { out.diagnostics.push_back(msg); };
  if (!g.has_vertex(d.base))
    flag("base vertex " + std::to_string(d.base) + " not in the graph");
  if (d.ears.empty()) flag("no ears");
  std::set<Vertex> seen{d.base};
  std::vector<int> edge_use(g.num_edges(), 0);
  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const EarPath& ear = d.ears[i];
    std::string tag = "ear " + std::to_string(i + 1);
    if (ear.vertices.size() < 2) {
      flag(tag + " has no edges");
      continue;
    }
    Vertex u = ear.vertices.front(), w = ear.vertices.back();
    if (!seen.count(u))
      flag(tag + " start " + std::to_string(u) + " not on an earlier piece");
    if (!seen.count(w))
      flag(tag + " end " + std::to_string(w) + " not on an earlier piece");
    std::set<Vertex> inner;
    for (std::size_t k = 1; k + 1 < ear.vertices.size(); ++k) {
      Vertex v = ear.vertices[k];
      if (seen.count(v))
        flag(tag + " inner vertex " + std::to_string(v) +
             " already on an earlier piece");
      if (!inner.insert(v).second)
        flag(tag + " repeats inner vertex " + std::to_string(v));
    }
    for (const Edge& e : ear.edge_list()) {
      int idx = g.edge_index(e);
      if (idx < 0) {
        flag(tag + " uses non-edge " + edge_str(e));
        continue;
      }
      if (++edge_use[idx] > 1) flag("edge " + edge_str(e) + " used more than once");
    }
    for (Vertex v : ear.vertices) seen.insert(v);
  }
  for (int i = 0; i < g.num_edges(); ++i)
    if (edge_use[i] == 0) flag("edge " + edge_str(g.edges()[i]) + " not covered");
  out.valid = out.diagnostics.empty();
  return out;
}

int even_ear_count(const EarDecomposition& d) {
  int n = 0;
  for (const auto& ear : d.ears)
    if (ear.edge_count() % 2 == 0) ++n;
  return n;
}

// ---- shared ear search machinery ----

namespace {

struct EarSearchBudget {
  std::size_t cap;
  std::size_t nodes = 0;
  void tick() {
    if (++nodes > cap)
      throw ResourceLimitError("ear search exceeded the node budget of " +
                               std::to_string(cap));
  }
};

// All admissible next ears given the pieces built so far: paths between two
// placed vertices through fresh distinct inner vertices over unused edges.
// Open ears are produced once (smaller endpoint first), closed ears once per
// anchor with the inner sequence in its lesser direction.
std::vector<std::vector<Vertex>> candidate_ears(const Graph& g,
                                                const std::vector<bool>& used,
                                                const std::set<Vertex>& visited,
                                                EarSearchBudget& budget) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::set<int> path_edges;
  std::function<void(Vertex, Vertex)> extend = [&](Vertex anchor, Vertex x) {
    budget.tick();
    for (Vertex y : g.neighbors(x)) {
      int e = g.edge_index(x, y);
      if (used[e] || path_edges.count(e)) continue;
      if (visited.count(y)) {
        bool keep = (y == anchor)
                        ? path.size() >= 3 && path[1] < path.back()
                        : anchor < y;
        if (keep) {
          auto ear = path;
          ear.push_back(y);
          out.push_back(std::move(ear));
        }
      } else if (!std::count(path.begin(), path.end(), y)) {
        path.push_back(y);
        path_edges.insert(e);
        extend(anchor, y);
        path_edges.erase(e);
        path.pop_back();
      }
    }
  };
  for (Vertex u : visited) {
    path.assign(1, u);
    extend(u, u);
  }
  return out;
}

std::uint64_t ear_mask(const Graph& g, const std::vector<Vertex>& ear) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i + 1 < ear.size(); ++i)
    mask |= 1ULL << g.edge_index(ear[i], ear[i + 1]);
  return mask;
}

void unpack_mask(const Graph& g, std::uint64_t mask, std::vector<bool>& used,
                 std::set<Vertex>& visited) {
  used.assign(g.num_edges(), false);
  visited.clear();
  for (int i = 0; i < g.num_edges(); ++i)
    if (mask >> i & 1) {
      used[i] = true;
      visited.insert(g.edges()[i].first);
      visited.insert(g.edges()[i].second);
    }
}

EarPath cycle_as_ear(const Cycle& c) {
  EarPath p;
  p.vertices = c.vertex_sequence;
  p.vertices.push_back(c.vertex_sequence.front());
  return p;
}

void require_ear_search_fits(const Graph& g) {
  if (!is_biconnected(g))
    throw PreconditionError("ear decompositions need a 2-connected graph");
  if (g.num_edges() > 62)
    throw ResourceLimitError("ear search limited to 62 edges");
}

}  // namespace

EarDecomposition find_ear_decomposition(const Graph& g, std::size_t node_cap) {
  require_ear_search_fits(g);
  EarSearchBudget budget{node_cap};
  const std::uint64_t full = (1ULL << g.num_edges()) - 1;
  EarDecomposition dec;
  std::vector<bool> used;
  std::set<Vertex> visited;

  std::function<bool(std::uint64_t)> grow = [&](std::uint64_t mask) -> bool {
    if (mask == full) return true;
    budget.tick();
    unpack_mask(g, mask, used, visited);
    for (const auto& ear : candidate_ears(g, used, visited, budget)) {
      dec.ears.push_back(EarPath{ear});
      if (grow(mask | ear_mask(g, ear))) return true;
      dec.ears.pop_back();
    }
    return false;
  };

  for (const Cycle& c : enumerate_simple_cycles(g)) {
    dec.base = c.vertex_sequence.front();
    dec.ears.assign(1, cycle_as_ear(c));
    if (grow(ear_mask(g, dec.ears[0].vertices))) return dec;
  }
  throw InconsistencyError("no ear decomposition found for a 2-connected graph");
}

int min_even_ears(const Graph& g, std::size_t node_cap) {
  require_ear_search_fits(g);
  EarSearchBudget budget{node_cap};
  const std::uint64_t full = (1ULL << g.num_edges()) - 1;
  constexpr int kInf = INT_MAX / 2;
  std::unordered_map<std::uint64_t, int> memo;
  std::vector<bool> used;
  std::set<Vertex> visited;

  std::function<int(std::uint64_t)> complete = [&](std::uint64_t mask) -> int {
    if (mask == full) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    budget.tick();
    unpack_mask(g, mask, used, visited);
    int best = kInf;
    for (const auto& ear : candidate_ears(g, used, visited, budget)) {
      int parity = (static_cast<int>(ear.size()) - 1) % 2 == 0 ? 1 : 0;
      best = std::min(best, parity + complete(mask | ear_mask(g, ear)));
    }
    memo[mask] = best;
    return best;
  };

  int best = kInf;
  for (const Cycle& c : enumerate_simple_cycles(g)) {
    std::uint64_t mask = 0;
    for (const Edge& e : c.edge_set) mask |= 1ULL << g.edge_index(e);
    best = std::min(best, (c.length() % 2 == 0 ? 1 : 0) + complete(mask));
  }
  if (best >= kInf)
    throw InconsistencyError("no ear decomposition found for a 2-connected graph");
  log_debug("min even ears: " + std::to_string(memo.size()) + " states");
  return best;
}

FrankCheckResult frank_check(const Graph& g) {
  FrankCheckResult res;
  res.mu = max_join(g).mu;
  res.phi = min_even_ears(g);
  res.holds = 2 * res.mu == res.phi + g.num_vertices() - 1;
  return res;
}

// ---- nesting ----

namespace {

// Admissible spans on one host piece for a guest anchored at (u, w): the
// subpath between the anchors on an open host, either arc on a closed host,
// and the empty or full span when the anchors coincide on a closed host.
std::vector<std::uint64_t> interval_candidates(const Graph& g,
                                               const std::vector<Vertex>& piece,
                                               Vertex u, Vertex w) {
  std::vector<std::uint64_t> out;
  if (piece.size() == 1) {
    if (u == piece[0] && w == piece[0]) out.push_back(0);
    return out;
  }
  bool closed = piece.front() == piece.back();
  int k = static_cast<int>(piece.size()) - 1;  // edge count
  auto pos_of = [&](Vertex v) -> int {
    int limit = closed ? k : k + 1;
    for (int i = 0; i < limit; ++i)
      if (piece[i] == v) return i;
    return -1;
  };
  int p = pos_of(u), q = pos_of(w);
  if (p < 0 || q < 0) return out;
  if (p > q) std::swap(p, q);
  auto edge_bit = [&](int i) {
    return 1ULL << g.edge_index(piece[i], piece[i + 1]);
  };
  std::uint64_t span = 0;
  for (int i = p; i < q; ++i) span |= edge_bit(i);
  if (!closed) {
    out.push_back(span);
    return out;
  }
  std::uint64_t whole = 0;
  for (int i = 0; i < k; ++i) whole |= edge_bit(i);
  if (p == q) {
    out.push_back(0);
    out.push_back(whole);
  } else {
    out.push_back(span);
    out.push_back(whole & ~span);
  }
  return out;
}

bool laminar_with(const std::vector<std::uint64_t>& existing, std::uint64_t iv) {
  for (std::uint64_t other : existing) {
    std::uint64_t common = other & iv;
    if (common != 0 && common != other && common != iv) return false;
  }
  return true;
}

std::vector<Edge> mask_to_edges(const Graph& g, std::uint64_t mask) {
  std::vector<Edge> out;
  for (int i = 0; i < g.num_edges(); ++i)
    if (mask >> i & 1) out.push_back(g.edges()[i]);
  return out;
}

}  // namespace

NestingResult is_nested(const Graph& g, const EarDecomposition& d) {
  EarVerification check = verify_ear_decomposition(g, d);
  if (!check.valid)
    throw PreconditionError("invalid ear decomposition: " + check.diagnostics.front());
  if (g.num_edges() > 62)
    throw ResourceLimitError("nesting check limited to 62 edges");

  std::vector<std::vector<Vertex>> pieces;
  pieces.push_back({d.base});
  for (const auto& ear : d.ears) pieces.push_back(ear.vertices);

  std::vector<std::pair<int, std::uint64_t>> chosen(d.ears.size());
  std::map<int, std::vector<std::uint64_t>> host_ivs;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == d.ears.size()) return true;
    Vertex u = d.ears[i].vertices.front(), w = d.ears[i].vertices.back();
    for (int j = 0; j <= static_cast<int>(i); ++j) {
      for (std::uint64_t iv : interval_candidates(g, pieces[j], u, w)) {
        if (!laminar_with(host_ivs[j], iv)) continue;
        host_ivs[j].push_back(iv);
        chosen[i] = {j, iv};
        if (assign(i + 1)) return true;
        host_ivs[j].pop_back();
      }
    }
    return false;
  };

  NestingResult res;
  if (!assign(0)) return res;
  res.nested = true;
  for (const auto& [host, iv] : chosen)
    res.assignment.push_back(NestAssignment{host, mask_to_edges(g, iv)});
  return res;
}

std::optional<NestedSearchResult> search_nested_decomposition(const Graph& g,
                                                              std::size_t node_cap) {
  require_ear_search_fits(g);
  EarSearchBudget budget{node_cap};
  const std::uint64_t full = (1ULL << g.num_edges()) - 1;

  std::vector<EarPath> ears;
  std::vector<std::vector<Vertex>> pieces;
  std::vector<std::pair<int, std::uint64_t>> chosen;
  std::map<int, std::vector<std::uint64_t>> host_ivs;
  std::vector<bool> used;
  std::set<Vertex> visited;

  std::function<bool(std::uint64_t)> grow = [&](std::uint64_t mask) -> bool {
    if (mask == full) return true;
    budget.tick();
    unpack_mask(g, mask, used, visited);
    for (const auto& ear : candidate_ears(g, used, visited, budget)) {
      Vertex u = ear.front(), w = ear.back();
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        for (std::uint64_t iv :
             interval_candidates(g, pieces[j], u, w)) {
          if (!laminar_with(host_ivs[static_cast<int>(j)], iv)) continue;
          host_ivs[static_cast<int>(j)].push_back(iv);
          chosen.emplace_back(static_cast<int>(j), iv);
          ears.push_back(EarPath{ear});
          pieces.push_back(ear);
          if (grow(mask | ear_mask(g, ear))) return true;
          pieces.pop_back();
          ears.pop_back();
          chosen.pop_back();
          host_ivs[static_cast<int>(j)].pop_back();
        }
      }
    }
    return false;
  };

  for (const Cycle& c : enumerate_simple_cycles(g)) {
    EarPath first = cycle_as_ear(c);
    ears.assign(1, first);
    pieces.clear();
    pieces.push_back({first.vertices.front()});
    pieces.push_back(first.vertices);
    chosen.assign(1, {0, 0});
    host_ivs.clear();
    host_ivs[0].push_back(0);
    if (grow(ear_mask(g, first.vertices))) {
      NestedSearchResult res;
      res.decomposition.base = first.vertices.front();
      res.decomposition.ears = ears;
      for (const auto& [host, iv] : chosen)
        res.assignment.push_back(NestAssignment{host, mask_to_edges(g, iv)});
      res.epsilon = even_ear_count(res.decomposition);
      return res;
    }
  }
  return std::nullopt;
}

}  // namespace graphideal
