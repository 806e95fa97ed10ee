#pragma once

#include <vector>

#include "graphideal/graph.hpp"
#include "graphideal/groebner.hpp"
#include "graphideal/monomial.hpp"

namespace graphideal {

struct MonomialIdeal {
  std::vector<Monomial> minimal_generators;  // divisibility antichain, sorted
  int num_vars = 0;
};

/// Leading monomials of a reduced basis (already minimal; re-minimalized
/// defensively).
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// Number of degree-d monomials outside the monomial ideal.
long long hilbert_function(const MonomialIdeal& mi, int d);

/// 2^(|V| - b0), halved once when the graph is bipartite.
long long degree_formula(const Graph& g);

/// Stabilized Hilbert function value, by first-plateau detection;
/// InconsistencyError if no plateau appears within the safe window.
long long degree_from_hf(const MonomialIdeal& mi);

/// Both routes, which must agree; InconsistencyError otherwise.
long long degree_checked(const Graph& g, const MonomialIdeal& mi);

/// Regularity of the graph ideal: 1 + the first degree where the Hilbert
/// function reaches the degree of the quotient.
int regularity(const GroebnerBasis& gb, const Graph& g);

/// Independent route: smallest k with no degree-k monomial outside
/// (graph ideal, t_e) — computed from a basis of the enlarged ideal.
int regularity_artinian(const GroebnerBasis& gb, const Edge& e);

/// Ideal membership of a monomial, optionally modulo one extra monomial
/// generator (the basis is recomputed for the enlarged ideal first).
bool monomial_membership(const Monomial& m, const GroebnerBasis& gb,
                         const Monomial* extra = nullptr);

/// Combinatorial membership test for a coprime homogeneous binomial
/// t^alpha - t^beta: collect the edges whose variable carries an odd exponent
/// in either side; the binomial lies in the graph ideal iff every vertex of
/// that edge set has even degree in it. PreconditionError unless the two
/// monomials are coprime and of equal degree.
bool binomial_in_ideal_oracle(const Graph& g, const VariableSpace& space,
                              const Monomial& alpha, const Monomial& beta);

}  // namespace graphideal
