// Acceptance gate: twelve end-to-end criteria, one line each, exact arithmetic
// throughout. Exit status 0 only when every criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphideal/combinatorics.hpp"
#include "graphideal/errors.hpp"
#include "graphideal/invariants.hpp"
#include "graphideal/poly_io.hpp"
#include "graphideal/verify.hpp"
#include "testutil.hpp"

using namespace graphideal;

namespace {

struct Gate {
  int failures = 0;

  // detail carries the failure reason, or an evidence note on success
  void report(int index, bool ok, const std::string& what, const std::string& detail) {
    std::string line = std::string(ok ? "PASS" : "FAIL") + " criterion " +
                       std::to_string(index) + ": " + what;
    if (!detail.empty()) line += ok ? " (" + detail + ")" : " [" + detail + "]";
    std::puts(line.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }

  template <typename Fn>
  void run(int index, const std::string& what, Fn&& fn) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    if (!detail.empty()) detail += ", ";
    detail += buf;
    report(index, ok, what, detail);
  }
};

bool expect(std::string& detail, bool cond, const std::string& msg) {
  if (!cond && detail.empty()) detail = msg;
  return cond;
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// sorted ascending by leading monomial, for set comparison of reduced bases
std::vector<Polynomial> sorted_basis(std::vector<Polynomial> elems,
                                     const MonomialOrder& ord) {
  std::sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  return elems;
}

// ---- shared corpus pass: one theorem battery per graph, reused by 7/9/11 ----

struct CorpusRow {
  Graph g;
  std::vector<Verdict> verdicts;
};

const std::vector<CorpusRow>& corpus_rows() {
  static const std::vector<CorpusRow> rows = [] {
    RunConfig cfg;  // p = 3, sweep {5, 7}
    std::vector<CorpusRow> out;
    for (Graph& g : generate_corpus(100, 8, 1)) {
      std::vector<Verdict> v = check_graph(g, cfg);
      out.push_back({std::move(g), std::move(v)});
    }
    return out;
  }();
  return rows;
}

VerdictStatus verdict_status(const std::vector<Verdict>& vs, const std::string& id) {
  for (const auto& v : vs)
    if (v.theorem_id == id) return v.status;
  return VerdictStatus::fail;
}

// ---- criterion 12 graph family ----

struct FamilyMember {
  std::string name;
  Graph g;
};

// hubs 1 and 2 joined by three internally disjoint paths of the given edge counts
Graph theta(int a, int b, int c) {
  std::vector<Edge> edges;
  int next = 3;
  for (int len : {a, b, c}) {
    int prev = 1;
    for (int i = 0; i + 1 < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 2});
  }
  return Graph::from_edges(std::move(edges));
}

std::vector<FamilyMember> nested_family() {
  std::vector<FamilyMember> fam;
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{
           {2, 2, 2}, {2, 2, 4}, {2, 2, 6}, {2, 4, 4}, {1, 3, 3}, {1, 3, 5}, {3, 3, 3}})
    fam.push_back({"theta(" + str(a) + "," + str(b) + "," + str(c) + ")", theta(a, b, c)});

  using testutil::make_graph;
  // 4-cycle with two parallel struts across 1-3
  fam.push_back({"strut2x", make_graph({{1, 2}, {2, 3}, {3, 4}, {1, 4},
                                        {1, 5}, {3, 5}, {1, 6}, {3, 6}})});
  // 4-cycle, one strut across 1-3, one length-3 path nested across 1-2
  fam.push_back({"strict_nest", make_graph({{1, 2}, {2, 3}, {3, 4}, {1, 4},
                                            {1, 5}, {3, 5}, {1, 6}, {6, 7}, {2, 7}})});
  // 6-cycle with two parallel struts across 1-3
  fam.push_back({"c6_strut2x", make_graph({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                                           {1, 7}, {3, 7}, {1, 8}, {3, 8}})});
  // 8-cycle with one strut across 1-5
  fam.push_back({"c8_strut", make_graph({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                         {7, 8}, {1, 8}, {1, 9}, {5, 9}})});
  // 6-cycle with a length-4 path across 1-3
  fam.push_back({"c6_arch4", make_graph({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6},
                                         {1, 7}, {7, 8}, {8, 9}, {3, 9}})});
  return fam;
}

}  // namespace

int main() {
  auto started = std::chrono::steady_clock::now();
  Gate gate;

  gate.run(1, "single edge: zero ideal, degree 1, reg 1, mu 1", [](std::string& d) {
    Graph g = testutil::single_edge();
    GroebnerBasis gb = ideal_of_graph(g, 3);
    return expect(d, gb.elements.empty(), "basis not empty") &&
           expect(d, degree_checked(g, initial_ideal(gb)) == 1, "degree") &&
           expect(d, regularity(gb, g) == 1, "reg") && expect(d, max_join(g).mu == 1, "mu");
  });

  gate.run(2, "4-cycle over GF(3): documented generators, degree 4, reg 2",
           [](std::string& d) {
             Graph g = testutil::c4();
             GroebnerBasis gb = ideal_of_graph(g, 3);
             const std::vector<std::string> listed = {
                 "t1_2*t3_4 - t1_4*t2_3",
                 "t1_2^2 - t1_4^2",
                 "t2_3^2 - t1_4^2",
                 "t3_4^2 - t1_4^2",
                 "t1_2*t2_3 - t1_4*t3_4",
                 "t1_2*t1_4 - t2_3*t3_4",
             };
             std::vector<Polynomial> gens;
             for (const auto& s : listed)
               gens.push_back(parse_polynomial(s, gb.space, gb.field, gb.order));
             // mutual reduction: listed generators vanish against the computed
             // basis, and the computed basis vanishes against theirs
             for (std::size_t i = 0; i < gens.size(); ++i)
               if (!expect(d, in_ideal(gens[i], gb), "generator " + str(i) + " not absorbed"))
                 return false;
             GroebnerBasis from_listed = buchberger(gens, gb.order, gb.field, gb.space);
             for (const auto& f : gb.elements)
               if (!expect(d, reduce(f, from_listed.elements, gb.field, gb.order).is_zero(),
                           "computed element escapes the listed ideal"))
                 return false;
             return expect(d, degree_checked(g, initial_ideal(gb)) == 4, "degree") &&
                    expect(d, regularity(gb, g) == 2, "reg");
           });

  gate.run(3, "two triangles joined by a bridge: 16-element basis, reg 4, degree 32, "
              "mu 3, bounds 3 <= 4 <= 6",
           [](std::string& d) {
             Graph g = testutil::two_triangles();
             std::vector<Edge> precedence = {{1, 2}, {2, 3}, {1, 3}, {3, 4},
                                             {4, 5}, {5, 6}, {4, 6}};
             GroebnerBasis gb = ideal_of_graph(g, 3, &precedence);

             std::vector<std::string> expected = {
                 "t1_3*t4_5*t5_6 - t1_2*t2_3*t4_6", "t2_3*t4_5*t5_6 - t1_2*t1_3*t4_6",
                 "t1_2*t4_5*t5_6 - t2_3*t1_3*t4_6", "t2_3*t1_3*t5_6 - t1_2*t4_5*t4_6",
                 "t1_2*t1_3*t5_6 - t2_3*t4_5*t4_6", "t1_2*t2_3*t5_6 - t1_3*t4_5*t4_6",
                 "t2_3*t1_3*t4_5 - t1_2*t5_6*t4_6", "t1_2*t1_3*t4_5 - t2_3*t5_6*t4_6",
                 "t1_2*t2_3*t4_5 - t1_3*t5_6*t4_6", "t1_2*t2_3*t1_3 - t4_5*t5_6*t4_6",
             };
             for (const char* e : {"t1_2", "t2_3", "t1_3", "t3_4", "t4_5", "t5_6"})
               expected.push_back(std::string(e) + "^2 - t4_6^2");

             if (!expect(d, gb.elements.size() == expected.size(),
                         "basis has " + str(gb.elements.size()) + " elements"))
               return false;
             std::vector<Polynomial> want;
             for (const auto& s : expected)
               want.push_back(monic(parse_polynomial(s, gb.space, gb.field, gb.order),
                                    gb.field));
             want = sorted_basis(std::move(want), gb.order);
             for (std::size_t i = 0; i < want.size(); ++i)
               if (!expect(d, want[i] == gb.elements[i], "element " + str(i) + " differs"))
                 return false;

             int reg = regularity(gb, g);
             int upper = g.num_vertices() - 1 + 1;  // connected, not bipartite
             return expect(d, reg == 4, "reg " + str(reg)) &&
                    expect(d, degree_checked(g, initial_ideal(gb)) == 32, "degree") &&
                    expect(d, max_join(g).mu == 3, "mu") &&
                    expect(d, 3 <= reg && reg <= upper && upper == 6, "bounds");
           });

  gate.run(4, "triangle: reg 3 = |V| - b0 + 1, degree 4, two quadric differences",
           [](std::string& d) {
             Graph g = testutil::k3();
             GroebnerBasis gb = ideal_of_graph(g, 3);
             if (!expect(d, gb.elements.size() == 2,
                         "basis has " + str(gb.elements.size()) + " elements"))
               return false;
             for (const auto& f : gb.elements) {
               bool quadric_difference =
                   f.term_count() == 2 && f.is_homogeneous() && f.degree() == 2 &&
                   f.terms()[0].mon.factors().size() == 1 &&
                   f.terms()[1].mon.factors().size() == 1;
               if (!expect(d, quadric_difference, "element is not a pure quadric difference"))
                 return false;
             }
             return expect(d, regularity(gb, g) == 3, "reg") &&
                    expect(d, g.num_vertices() - 1 + 1 == 3, "vertex count") &&
                    expect(d, degree_checked(g, initial_ideal(gb)) == 4, "degree");
           });

  gate.run(5, "complete bipartite 2x3: reg 3 = max{2,3} = mu", [](std::string& d) {
    Graph g = testutil::k23();
    GroebnerBasis gb = ideal_of_graph(g, 3);
    int reg = regularity(gb, g);
    int mu = max_join(g).mu;
    return expect(d, reg == 3, "reg " + str(reg)) &&
           expect(d, mu == 3, "mu " + str(mu)) && expect(d, reg == std::max(2, 3), "max");
  });

  gate.run(6, "K33 minus an edge: reg 3 = |V|/2 = mu; both documented ear "
              "decompositions valid, neither nested; phi 1; 2*mu = phi + |V| - 1",
           [](std::string& d) {
             Graph g = testutil::k33_minus();
             GroebnerBasis gb = ideal_of_graph(g, 3);
             int reg = regularity(gb, g);
             int mu = max_join(g).mu;
             if (!expect(d, reg == 3 && mu == 3 && g.num_vertices() == 6, "reg/mu"))
               return false;

             EarDecomposition one;  // long cycle plus two chords
             one.base = 1;
             one.ears = {EarPath{{1, 2, 5, 4, 3, 6, 1}}, EarPath{{2, 3}}, EarPath{{1, 4}}};
             EarDecomposition two;  // short cycle plus two 2-paths
             two.base = 1;
             two.ears = {EarPath{{1, 2, 3, 4, 1}}, EarPath{{2, 5, 4}}, EarPath{{3, 6, 1}}};

             for (const auto* dec : {&one, &two})
               if (!expect(d, verify_ear_decomposition(g, *dec).valid, "decomposition invalid"))
                 return false;
             if (!expect(d, even_ear_count(one) == 1 && even_ear_count(two) == 3,
                         "even ear counts"))
               return false;
             if (!expect(d, !is_nested(g, one).nested && !is_nested(g, two).nested,
                         "a documented decomposition nests"))
               return false;
             if (!expect(d, !search_nested_decomposition(g).has_value(),
                         "search found a nested decomposition"))
               return false;
             int phi = min_even_ears(g);
             return expect(d, phi == 1, "phi " + str(phi)) &&
                    expect(d, 2 * mu == phi + g.num_vertices() - 1, "identity");
           });

  gate.run(7, "field independence across GF(3), GF(5), GF(7) on the random corpus",
           [](std::string& d) {
             int checked = 0;
             for (const auto& row : corpus_rows()) {
               if (!expect(d,
                           verdict_status(row.verdicts, "fieldIndependence") ==
                               VerdictStatus::pass,
                           "graph " + row.g.key()))
                 return false;
               ++checked;
             }
             if (!expect(d, checked == 100, "corpus size " + str(checked))) return false;
             d = "100 graphs under each of GF(3), GF(5), GF(7)";
             return true;
           });

  gate.run(8, "exhaustive sweep, all connected bipartite graphs with at most 6 edges: "
              "reg = mu",
           [](std::string& d) {
             long long swept = 0;
             for (int n = 2; n <= 7; ++n) {
               std::vector<Edge> candidates;
               for (int a = 1; a <= n; ++a)
                 for (int b = a + 1; b <= n; ++b) candidates.push_back({a, b});
               const int total = static_cast<int>(candidates.size());
               // connected spanning graphs need between n-1 and 6 edges
               std::vector<int> pick;
               auto sweep = [&](auto&& self, int from, int want) -> bool {
                 if (want == 0) {
                   std::vector<Edge> edges;
                   for (int idx : pick) edges.push_back(candidates[idx]);
                   Graph g = Graph::from_edges(std::move(edges));
                   if (g.num_vertices() != n) return true;
                   if (connected_components(g).count != 1) return true;
                   if (!is_bipartite(g).bipartite) return true;
                   GroebnerBasis gb = ideal_of_graph(g, 3);
                   int reg = regularity(gb, g);
                   int mu = max_join(g).mu;
                   ++swept;
                   return expect(d, reg == mu,
                                 g.key() + ": reg " + str(reg) + " vs mu " + str(mu));
                 }
                 for (int i = from; i + want <= total; ++i) {
                   pick.push_back(i);
                   bool ok = self(self, i + 1, want - 1);
                   pick.pop_back();
                   if (!ok) return false;
                 }
                 return true;
               };
               for (int m = std::max(1, n - 1); m <= 6; ++m)
                 if (!sweep(sweep, 0, m)) return false;
             }
             if (!expect(d, swept > 18000, "sweep too small: " + str(swept))) return false;
             d = "swept " + str(swept) + " graphs";
             return true;
           });

  gate.run(9, "random corpus, seed 1, 100 graphs: bounds, degree formula, block "
              "additivity",
           [](std::string& d) {
             for (const auto& row : corpus_rows()) {
               for (const char* id : {"lowerBound", "upperBound", "degreeFormula"})
                 if (!expect(d, verdict_status(row.verdicts, id) == VerdictStatus::pass,
                             row.g.key() + ": " + id))
                   return false;
               bool bip = is_bipartite(row.g).bipartite;
               VerdictStatus blocks = verdict_status(row.verdicts, "blockAdditivity");
               if (!expect(d, blocks == (bip ? VerdictStatus::pass : VerdictStatus::skipped),
                           row.g.key() + ": blockAdditivity"))
                 return false;
             }
             return true;
           });

  gate.run(10, "parity oracle vs basis reduction, all coprime homogeneous binomials of "
               "degree <= 3, golden graphs with <= 7 edges",
           [](std::string& d) {
             const Graph graphs[] = {testutil::single_edge(), testutil::c4(),
                                     testutil::k3(),          testutil::c6(),
                                     testutil::k23(),         testutil::two_triangles(),
                                     testutil::forest6()};
             long long agreements = 0;
             for (const Graph& g : graphs) {
               GroebnerBasis gb = ideal_of_graph(g, 3);
               VariableSpace space = VariableSpace::for_graph(g);
               for (int deg = 1; deg <= 3; ++deg) {
                 auto mons = testutil::monomials_of_degree(g.num_edges(), deg);
                 for (std::size_t a = 0; a < mons.size(); ++a)
                   for (std::size_t b = a + 1; b < mons.size(); ++b) {
                     if (!mons[a].coprime(mons[b])) continue;
                     bool oracle = binomial_in_ideal_oracle(g, space, mons[a], mons[b]);
                     Polynomial f =
                         Polynomial::make({{1, mons[a]}, {gb.field.neg(1), mons[b]}},
                                          gb.field, gb.order);
                     bool reduced = in_ideal(f, gb);
                     ++agreements;
                     if (!expect(d, oracle == reduced,
                                 g.key() + ": disagreement on " +
                                     monomial_to_string(mons[a], space) + " - " +
                                     monomial_to_string(mons[b], space)))
                       return false;
                   }
               }
             }
             if (!expect(d, agreements > 3000, "too few comparisons: " + str(agreements)))
               return false;
             d = "compared " + str(agreements) + " binomials";
             return true;
           });

  gate.run(11, "regularity equals its artinian-reduction route for every edge, whole "
               "corpus",
           [](std::string& d) {
             for (const auto& row : corpus_rows()) {
               GroebnerBasis gb = ideal_of_graph(row.g, 3);
               int reg = regularity(gb, row.g);
               for (const Edge& e : row.g.edges()) {
                 int alt = regularity_artinian(gb, e);
                 if (!expect(d, alt == reg,
                             row.g.key() + " edge " + str(e.first) + "-" + str(e.second) +
                                 ": " + str(alt) + " vs " + str(reg)))
                   return false;
               }
             }
             return true;
           });

  gate.run(12, "nested-ear family (<= 10 edges): 2*reg = |V| + eps - 1 and eps = phi",
           [](std::string& d) {
             int found = 0;
             for (const auto& member : nested_family()) {
               auto nested = search_nested_decomposition(member.g);
               if (!nested) continue;  // formula only claims graphs it applies to
               ++found;
               GroebnerBasis gb = ideal_of_graph(member.g, 3);
               int reg = regularity(gb, member.g);
               int n = member.g.num_vertices();
               int phi = min_even_ears(member.g);
               if (!expect(d, 2 * reg == n + nested->epsilon - 1,
                           member.name + ": reg " + str(reg) + ", eps " +
                               str(nested->epsilon)))
                 return false;
               if (!expect(d, nested->epsilon == phi,
                           member.name + ": eps " + str(nested->epsilon) + " vs phi " +
                               str(phi)))
                 return false;
             }
             if (!expect(d, found >= 10,
                         "search succeeded on only " + str(found) + " members"))
               return false;
             d = str(found) + " of 12 family members verified";
             return true;
           });

  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::printf("%d/12 criteria passed in %llds\n", 12 - gate.failures,
              static_cast<long long>(elapsed));
  return gate.failures == 0 ? 0 : 1;
}
