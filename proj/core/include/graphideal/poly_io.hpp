#pragma once

#include <string>
#include <string_view>

#include "graphideal/field.hpp"
#include "graphideal/polynomial.hpp"
#include "graphideal/varspace.hpp"

namespace graphideal {

/// Text form "2*t1_2^2*t2_3 - t1_4*t3_4": terms descending in the order the
/// polynomial was built with, factors by ascending variable index, signs
/// taken from the symmetric representative of each coefficient mod p.
std::string to_string(const Polynomial& f, const VariableSpace& space,
                      const PrimeField& F);

/// Inverse of to_string (also accepts unnormalized spacing, explicit '+',
/// multi-digit coefficients and exponents). ParseError on malformed input or
/// unknown variables.
Polynomial parse_polynomial(std::string_view text, const VariableSpace& space,
                            const PrimeField& F, const MonomialOrder& ord);

std::string monomial_to_string(const Monomial& m, const VariableSpace& space);

}  // namespace graphideal
