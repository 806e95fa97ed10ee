#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphideal/field.hpp"
#include "graphideal/graph.hpp"
#include "graphideal/order.hpp"
#include "graphideal/polynomial.hpp"
#include "graphideal/varspace.hpp"

namespace graphideal {

/// A reduced Groebner basis: monic elements, no leading monomial dividing
/// another, tails fully reduced, sorted ascending by leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order;
  PrimeField field;
  VariableSpace space;
};

/// The presentation of the graph ideal in the extended ring K[t, x, z]:
/// one binomial t_e - x_i*x_j*z per edge e = {i,j}, plus x_i^2 - x_k^2 for
/// every vertex i other than the largest vertex k. Eliminating {x, z} from
/// the ideal these generate leaves exactly the graph ideal in K[t].
std::vector<Polynomial> build_extended_generators(const Graph& g,
                                                  const VariableSpace& space,
                                                  const PrimeField& F);

/// Buchberger with the normal pair-selection strategy (lowest lcm degree,
/// ties by pair index), the coprime-leading-monomial criterion, and full
/// autoreduction at the end. ResourceLimitError when the pair queue grows
/// past `pair_cap`.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& ord, const PrimeField& F,
                         const VariableSpace& space, std::size_t pair_cap = 1000000);

/// Restrict a reduced basis under the elimination order to the edge-variable
/// subring; the result is the reduced basis of the elimination ideal under
/// the induced grevlex order.
GroebnerBasis eliminate(const GroebnerBasis& full);

/// End-to-end pipeline: extended generators -> buchberger under the
/// elimination order -> eliminate. Results are cached per (graph, p,
/// t-variable precedence).
GroebnerBasis ideal_of_graph(const Graph& g, std::uint32_t p = 3,
                             const std::vector<Edge>* t_precedence = nullptr,
                             std::size_t pair_cap = 1000000);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool in_ideal(const Polynomial& f, const GroebnerBasis& gb);

/// {"characteristic": p, "order": "...", "elements": [...]} with a stable
/// element order; ends with a newline.
std::string gb_to_json(const GroebnerBasis& gb);

}  // namespace graphideal
