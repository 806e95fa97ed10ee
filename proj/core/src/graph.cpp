#include "graphideal/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "graphideal/errors.hpp"

namespace graphideal {

namespace {

std::string edge_str(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void normalize_edges(std::vector<Edge>& edges) {
  for (auto& e : edges) {
    if (e.first == e.second)
      throw ValidationError("loop edge " + edge_str(e.first, e.second));
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first <= 0)
      throw ValidationError("vertex ids must be positive, got " +
                            edge_str(e.first, e.second));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw ValidationError("parallel edge " + edge_str(dup->first, dup->second));
  if (edges.empty()) throw ValidationError("graph has no edges");
}

}  // namespace

Graph Graph::from_edges(std::vector<Edge> edges) {
  normalize_edges(edges);
  Graph g;
  g.edges_ = std::move(edges);
  std::set<Vertex> vs;
  for (const auto& e : g.edges_) {
    vs.insert(e.first);
    vs.insert(e.second);
  }
  g.vertices_.assign(vs.begin(), vs.end());
  for (const auto& e : g.edges_) {
    g.adjacency_[e.first].push_back(e.second);
    g.adjacency_[e.second].push_back(e.first);
  }
  for (auto& [v, nbrs] : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::from_edges(std::vector<Edge> edges, std::vector<Vertex> vertices) {
  Graph g = from_edges(std::move(edges));
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (Vertex v : vertices)
    if (!g.has_vertex(v))
      throw ValidationError("isolated vertex " + std::to_string(v));
  for (Vertex v : g.vertices_)
    if (!std::binary_search(vertices.begin(), vertices.end(), v))
      throw ValidationError("vertex list omits edge endpoint " + std::to_string(v));
  return g;
}

bool Graph::has_vertex(Vertex v) const { return adjacency_.count(v) > 0; }

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end())
    throw PreconditionError("unknown vertex " + std::to_string(v));
  return it->second;
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  Edge e{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::string Graph::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ',';
    os << edges_[i].first << '-' << edges_[i].second;
  }
  return os.str();
}

// ---- parsing ----

namespace {

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("expected an object with an \"edges\" array");
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("each edge must be a pair of integers");
    edges.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array())
      throw ParseError("\"vertices\" must be an array of integers");
    std::vector<Vertex> vertices;
    for (const auto& item : doc["vertices"]) {
      if (!item.is_number_integer())
        throw ParseError("\"vertices\" must be an array of integers");
      vertices.push_back(item.get<int>());
    }
    return Graph::from_edges(std::move(edges), std::move(vertices));
  }
  return Graph::from_edges(std::move(edges));
}

Graph parse_graph_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long a, b;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected exactly two integers");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return Graph::from_edges(std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos) throw ParseError("empty graph input");
  if (text[pos] == '{') return parse_graph_json(text);
  return parse_graph_edge_list(text);
}

// ---- components / bipartiteness ----

ComponentLabeling connected_components(const Graph& g) {
  ComponentLabeling out;
  for (Vertex root : g.vertices()) {
    if (out.label.count(root)) continue;
    int id = out.count++;
    std::deque<Vertex> queue{root};
    out.label[root] = id;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u))
        if (!out.label.count(w)) {
          out.label[w] = id;
          queue.push_back(w);
        }
    }
  }
  return out;
}

namespace {

// Rotate a closed vertex walk so its smallest vertex comes first, then pick
// the direction whose second vertex is smaller.
std::vector<Vertex> canonical_cycle_sequence(std::vector<Vertex> seq) {
  auto minpos = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), minpos, seq.end());
  if (seq.size() >= 3 && seq[1] > seq.back())
    std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

Cycle make_cycle(std::vector<Vertex> seq) {
  Cycle c;
  c.vertex_sequence = canonical_cycle_sequence(std::move(seq));
  for (std::size_t i = 0; i < c.vertex_sequence.size(); ++i) {
    Vertex a = c.vertex_sequence[i];
    Vertex b = c.vertex_sequence[(i + 1) % c.vertex_sequence.size()];
    c.edge_set.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(c.edge_set.begin(), c.edge_set.end());
  return c;
}

}  // namespace

BipartiteResult is_bipartite(const Graph& g) {
  BipartiteResult res;
  std::map<Vertex, int> color;
  std::map<Vertex, Vertex> parent;
  for (Vertex root : g.vertices()) {
    if (color.count(root)) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (!color.count(w)) {
          color[w] = 1 - color[u];
          parent[w] = u;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Same colour across an edge: the two tree paths to their lowest
          // common ancestor plus this edge close an odd cycle.
          std::vector<Vertex> up{u};
          for (Vertex a = u; parent.count(a);) up.push_back(a = parent[a]);
          std::set<Vertex> on_up(up.begin(), up.end());
          std::vector<Vertex> wp{w};
          Vertex lca = w;
          while (!on_up.count(lca)) {
            lca = parent.at(lca);
            wp.push_back(lca);
          }
          std::vector<Vertex> seq;
          for (Vertex a : up) {
            seq.push_back(a);
            if (a == lca) break;
          }
          for (auto it = wp.rbegin(); it != wp.rend(); ++it)
            if (*it != lca) seq.push_back(*it);
          res.bipartite = false;
          res.odd_cycle = make_cycle(std::move(seq));
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  std::vector<Vertex> side0, side1;
  for (Vertex v : g.vertices()) (color[v] == 0 ? side0 : side1).push_back(v);
  res.partition = std::make_pair(std::move(side0), std::move(side1));
  return res;
}

// ---- simple cycles ----

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap) {
  std::vector<Cycle> out;
  std::vector<Vertex> path;
  std::set<Vertex> on_path;

  // Anchor each cycle at its smallest vertex; only walk through larger
  // vertices, and keep one direction by requiring the second vertex of the
  // walk to be smaller than the last.
  std::function<void(Vertex, Vertex)> extend = [&](Vertex anchor, Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      if (w == anchor && path.size() >= 3 && path[1] < path.back()) {
        if (out.size() >= cap)
          throw ResourceLimitError("cycle enumeration exceeded cap of " +
                                   std::to_string(cap));
        out.push_back(make_cycle(path));
      } else if (w > anchor && !on_path.count(w)) {
        path.push_back(w);
        on_path.insert(w);
        extend(anchor, w);
        on_path.erase(w);
        path.pop_back();
      }
    }
  };

  for (Vertex anchor : g.vertices()) {
    path.assign(1, anchor);
    on_path = {anchor};
    extend(anchor, anchor);
  }
  return out;
}

// ---- biconnected blocks ----

BlockDecomposition biconnected_blocks(const Graph& g) {
  std::map<Vertex, int> disc, low;
  std::vector<Edge> stack;
  BlockDecomposition out;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = ++timer;
    for (Vertex w : g.neighbors(u)) {
      if (!disc.count(w)) {
        Edge e{std::min(u, w), std::max(u, w)};
        stack.push_back(e);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<Edge> block;
          while (true) {
            Edge top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.push_back({std::min(u, w), std::max(u, w)});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (Vertex root : g.vertices())
    if (!disc.count(root)) dfs(root, 0);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool is_biconnected(const Graph& g) {
  return g.num_vertices() >= 3 && connected_components(g).count == 1 &&
         biconnected_blocks(g).blocks.size() == 1;
}

// ---- regularity upper-bound witness ----

Graph upper_bound_witness(const Graph& g) {
  std::map<Vertex, int> color;
  std::vector<Edge> tree;
  for (Vertex root : g.vertices()) {
    if (color.count(root)) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u))
        if (!color.count(w)) {
          color[w] = 1 - color[u];
          tree.emplace_back(std::min(u, w), std::max(u, w));
          queue.push_back(w);
        }
    }
  }
  if (!is_bipartite(g).bipartite) {
    // First same-coloured edge in canonical order closes one odd cycle
    // against the BFS forest.
    for (const auto& e : g.edges())
      if (color[e.first] == color[e.second]) {
        tree.push_back(e);
        break;
      }
  }
  return Graph::from_edges(std::move(tree));
}

}  // namespace graphideal
