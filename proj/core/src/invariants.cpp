#include "graphideal/invariants.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "graphideal/errors.hpp"

namespace graphideal {

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.elements.size());
  for (const auto& f : gb.elements) lms.push_back(f.leading_monomial());
  std::sort(lms.begin(), lms.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order.less(a, b);
  });
  MonomialIdeal mi;
  for (const auto& m : lms) {
    bool redundant = false;
    for (const auto& kept : mi.minimal_generators)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) mi.minimal_generators.push_back(m);
  }
  bool pure_t = true;
  for (const auto& m : mi.minimal_generators)
    for (const auto& [v, e] : m.factors())
      if (!gb.space.is_t_var(v)) pure_t = false;
  mi.num_vars = pure_t ? gb.space.num_edges() : gb.space.num_vars();
  return mi;
}

namespace {

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomials of degree d in vars [var..n) avoiding every generator, given the
// exponents already fixed. `alive` holds generators neither violated (some
// fixed exponent too small) nor satisfied (satisfied prunes the subtree).
long long count_free(const std::vector<std::vector<int>>& gens, int num_vars,
                     int var, int remaining, std::vector<int>& exps,
                     const std::vector<int>& alive) {
  if (alive.empty())
    return choose(remaining + (num_vars - var) - 1, (num_vars - var) - 1);
  if (var == num_vars - 1) {
    exps[var] = remaining;
    for (int gi : alive) {
      const auto& gen = gens[gi];
      bool divides = true;
      for (int v = var; v < num_vars && divides; ++v)
        if (exps[v] < gen[v]) divides = false;
      if (divides) return 0;
    }
    return 1;
  }
  long long total = 0;
  for (int e = 0; e <= remaining; ++e) {
    exps[var] = e;
    std::vector<int> next_alive;
    bool pruned = false;
    for (int gi : alive) {
      const auto& gen = gens[gi];
      if (e < gen[var]) continue;  // violated, drop
      bool satisfied = true;
      for (int v = var + 1; v < num_vars && satisfied; ++v)
        if (gen[v] > 0) satisfied = false;
      if (satisfied) {
        pruned = true;  // generator fully divides every completion
        break;
      }
      next_alive.push_back(gi);
    }
    if (!pruned)
      total += count_free(gens, num_vars, var + 1, remaining - e, exps, next_alive);
  }
  exps[var] = 0;
  return total;
}

}  // namespace

long long hilbert_function(const MonomialIdeal& mi, int d) {
  if (d < 0) return 0;
  if (mi.num_vars == 0) return d == 0 ? 1 : 0;
  std::vector<std::vector<int>> gens;
  for (const auto& m : mi.minimal_generators) {
    if (m.is_one()) return 0;
    std::vector<int> dense(mi.num_vars, 0);
    for (const auto& [v, e] : m.factors()) {
      if (v >= mi.num_vars)
        throw PreconditionError("monomial ideal generator outside its ring");
      dense[v] = e;
    }
    if (m.degree() <= d) gens.push_back(std::move(dense));
  }
  std::vector<int> alive(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) alive[i] = static_cast<int>(i);
  std::vector<int> exps(mi.num_vars, 0);
  return count_free(gens, mi.num_vars, 0, d, exps, alive);
}

long long degree_formula(const Graph& g) {
  int b0 = connected_components(g).count;
  int exponent = g.num_vertices() - b0 - (is_bipartite(g).bipartite ? 1 : 0);
  return 1LL << exponent;
}

namespace {
constexpr int kPlateauWindow = 64;
}

long long degree_from_hf(const MonomialIdeal& mi) {
  long long prev = hilbert_function(mi, 0);
  for (int d = 1; d <= kPlateauWindow; ++d) {
    long long cur = hilbert_function(mi, d);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw InconsistencyError("Hilbert function failed to stabilize within " +
                           std::to_string(kPlateauWindow) + " degrees");
}

long long degree_checked(const Graph& g, const MonomialIdeal& mi) {
  long long formula = degree_formula(g);
  long long from_hf = degree_from_hf(mi);
  if (formula != from_hf)
    throw InconsistencyError("degree mismatch: formula gives " +
                             std::to_string(formula) + ", Hilbert function gives " +
                             std::to_string(from_hf));
  return formula;
}

int regularity(const GroebnerBasis& gb, const Graph& g) {
  MonomialIdeal mi = initial_ideal(gb);
  long long deg = degree_checked(g, mi);
  for (int d = 0; d <= kPlateauWindow; ++d)
    if (hilbert_function(mi, d) == deg) return 1 + d;
  throw InconsistencyError("Hilbert function never reached the degree");
}

int regularity_artinian(const GroebnerBasis& gb, const Edge& e) {
  Polynomial cut = Polynomial::make(
      {{1, Monomial::variable(gb.space.t_var(e))}}, gb.field, gb.order);
  std::vector<Polynomial> gens = gb.elements;
  gens.push_back(cut);
  GroebnerBasis agb = buchberger(gens, gb.order, gb.field, gb.space);
  MonomialIdeal mi = initial_ideal(agb);
  int cap = gb.space.num_vertices() + 1;
  for (int k = 0; k <= cap; ++k)
    if (hilbert_function(mi, k) == 0) return k;
  throw InconsistencyError(
      "quotient by a cut variable stayed nonzero past degree " +
      std::to_string(cap));
}

bool monomial_membership(const Monomial& m, const GroebnerBasis& gb,
                         const Monomial* extra) {
  Polynomial f = Polynomial::make({{1, m}}, gb.field, gb.order);
  if (!extra) return in_ideal(f, gb);
  std::vector<Polynomial> gens = gb.elements;
  gens.push_back(Polynomial::make({{1, *extra}}, gb.field, gb.order));
  GroebnerBasis enlarged = buchberger(gens, gb.order, gb.field, gb.space);
  return in_ideal(f, enlarged);
}

bool binomial_in_ideal_oracle(const Graph& g, const VariableSpace& space,
                              const Monomial& alpha, const Monomial& beta) {
  if (space.edges() != g.edges())
    throw PreconditionError("variable space built for a different graph");
  if (!alpha.coprime(beta))
    throw PreconditionError("binomial sides share a variable");
  if (alpha.degree() != beta.degree())
    throw PreconditionError("binomial is not homogeneous");
  std::map<Vertex, int> parity;
  auto absorb = [&](const Monomial& m) {
    for (const auto& [v, e] : m.factors()) {
      if (!space.is_t_var(v))
        throw PreconditionError("binomial involves a non-edge variable");
      if (e % 2 == 0) continue;
      Edge edge = space.edge_of(v);
      parity[edge.first] ^= 1;
      parity[edge.second] ^= 1;
    }
  };
  absorb(alpha);
  absorb(beta);
  for (const auto& [v, odd] : parity)
    if (odd) return false;
  return true;
}

}  // namespace graphideal
