#include "graphideal/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "graphideal/errors.hpp"
#include "graphideal/log.hpp"
#include "graphideal/poly_io.hpp"

namespace graphideal {

std::vector<Polynomial> build_extended_generators(const Graph& g,
                                                  const VariableSpace& space,
                                                  const PrimeField& F) {
  const MonomialOrder ord = space.elimination_order();
  const std::uint32_t minus_one = F.neg(1);
  std::vector<Polynomial> gens;
  for (const Edge& e : g.edges()) {
    Monomial rhs = Monomial::from_factors(
        {{space.x_var(e.first), 1}, {space.x_var(e.second), 1}, {space.z_var(), 1}});
    gens.push_back(Polynomial::make(
        {{1, Monomial::variable(space.t_var(e))}, {minus_one, rhs}}, F, ord));
  }
  Vertex top = g.vertices().back();
  Monomial top_sq = Monomial::variable(space.x_var(top), 2);
  for (Vertex v : g.vertices()) {
    if (v == top) continue;
    gens.push_back(Polynomial::make(
        {{1, Monomial::variable(space.x_var(v), 2)}, {minus_one, top_sq}}, F, ord));
  }
  return gens;
}

namespace {

// Drop elements whose leading monomial is divisible by another's, then reduce
// every tail against the rest. Divisibility implies order-dominance, so an
// ascending sweep sees potential divisors before their multiples.
void autoreduce(std::vector<Polynomial>& basis, const MonomialOrder& ord,
                const PrimeField& F) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (const auto& f : basis) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(f.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(f);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = monic(reduce(minimal[i], others, F, ord), F);
  }
  basis = std::move(minimal);
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& ord, const PrimeField& F,
                         const VariableSpace& space, std::size_t pair_cap) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(monic(g, F));

  // Normal selection: lowest lcm degree first, ties by pair index.
  using PairKey = std::tuple<int, std::size_t, std::size_t>;
  std::set<PairKey> queue;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      queue.insert({Monomial::lcm_degree(basis[i].leading_monomial(),
                                         basis[j].leading_monomial()),
                    i, j});
    if (queue.size() > pair_cap)
      throw ResourceLimitError("s-pair queue exceeded cap of " +
                               std::to_string(pair_cap));
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  // Chain criterion: (i, j) is redundant once some k with LM(k) | lcm(i, j)
  // has had both of its pairs (i, k), (k, j) handled already. Pairs leave the
  // queue in a fixed sequence, so the justification never loops back.
  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return queue.count({Monomial::lcm_degree(basis[a].leading_monomial(),
                                             basis[b].leading_monomial()),
                        a, b}) != 0;
  };
  auto chain_redundant = [&](std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_monomial().divides(l)) continue;
      if (!pending(i, k) && !pending(k, j)) return true;
    }
    return false;
  };

  std::size_t reductions = 0;
  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    const Monomial& mi = basis[i].leading_monomial();
    const Monomial& mj = basis[j].leading_monomial();
    if (mi.coprime(mj)) continue;  // s-pair reduces to zero
    if (chain_redundant(i, j, Monomial::lcm(mi, mj))) continue;
    Polynomial r = reduce(s_polynomial(basis[i], basis[j], F, ord), basis, F, ord);
    ++reductions;
    if (r.is_zero()) continue;
    basis.push_back(monic(r, F));
    push_pairs_with(basis.size() - 1);
  }
  log_debug("buchberger: " + std::to_string(reductions) + " reductions, " +
            std::to_string(basis.size()) + " elements before autoreduction");

  autoreduce(basis, ord, F);
  return GroebnerBasis{std::move(basis), ord, F, space};
}

GroebnerBasis eliminate(const GroebnerBasis& full) {
  auto pure_t = [&](const Monomial& m) {
    for (const auto& [v, e] : m.factors())
      if (!full.space.is_t_var(v)) return false;
    return true;
  };
  MonomialOrder t_ord = full.space.t_order();
  std::vector<Polynomial> kept;
  for (const auto& f : full.elements) {
    if (!pure_t(f.leading_monomial())) continue;
    // Under the elimination order a pure-t leading monomial forces every term
    // to be pure t; rebuild under the edge-variable order it now lives in.
    std::vector<Term> terms = f.terms();
    for (const auto& t : terms)
      if (!pure_t(t.mon))
        throw InconsistencyError("elimination saw a mixed tail monomial");
    kept.push_back(Polynomial::make(std::move(terms), full.field, t_ord));
  }
  std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
    return t_ord.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis{std::move(kept), t_ord, full.field, full.space};
}

GroebnerBasis ideal_of_graph(const Graph& g, std::uint32_t p,
                             const std::vector<Edge>* t_precedence,
                             std::size_t pair_cap) {
  PrimeField F(p);
  VariableSpace space =
      t_precedence ? VariableSpace::for_graph(g, *t_precedence) : VariableSpace::for_graph(g);

  static std::map<std::string, GroebnerBasis> cache;
  std::string key = g.key() + "|" + std::to_string(p) + "|" + space.t_order_description();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  log_info("computing basis for " + g.key() + " over GF(" + std::to_string(p) + ")");
  GroebnerBasis full =
      buchberger(build_extended_generators(g, space, F), space.elimination_order(),
                 F, space, pair_cap);
  GroebnerBasis gb = eliminate(full);
  if (cache.size() >= 4096) cache.clear();
  cache.emplace(std::move(key), gb);
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce(f, gb.elements, gb.field, gb.order);
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

namespace {

std::string order_description(const MonomialOrder& ord, const VariableSpace& space) {
  std::string kind;
  switch (ord.kind()) {
    case MonomialOrder::Kind::grevlex: kind = "grevlex"; break;
    case MonomialOrder::Kind::lex: kind = "lex"; break;
    case MonomialOrder::Kind::block_elimination: kind = "eliminate"; break;
  }
  std::string out = kind + "(";
  for (std::size_t b = 0; b < ord.blocks().size(); ++b) {
    if (b) out += "; ";
    for (std::size_t r = 0; r < ord.blocks()[b].size(); ++r) {
      if (r) out += ">";
      out += space.var_name(ord.blocks()[b][r]);
    }
  }
  return out + ")";
}

}  // namespace

std::string gb_to_json(const GroebnerBasis& gb) {
  nlohmann::ordered_json j;
  j["characteristic"] = gb.field.p();
  j["order"] = order_description(gb.order, gb.space);
  auto elems = nlohmann::ordered_json::array();
  for (const auto& f : gb.elements) elems.push_back(to_string(f, gb.space, gb.field));
  j["elements"] = std::move(elems);
  return j.dump(2) + "\n";
}

}  // namespace graphideal
