#pragma once

#include <cstdint>
#include <vector>

#include "graphideal/field.hpp"
#include "graphideal/monomial.hpp"
#include "graphideal/order.hpp"

namespace graphideal {

struct Term {
  std::uint32_t coeff = 0;  // canonical in [0, p)
  Monomial mon;

  bool operator==(const Term& o) const { return coeff == o.coeff && mon == o.mon; }
};

/// Sparse polynomial over GF(p): terms with nonzero coefficients, kept sorted
/// descending under the order it was built with. All constructors and
/// arithmetic take the field and order explicitly; two polynomials compare
/// equal only when built under the same order.
class Polynomial {
 public:
  Polynomial() = default;  // zero

  /// Reduces coefficients, merges equal monomials, drops zeros, sorts.
  static Polynomial make(std::vector<Term> terms, const PrimeField& F,
                         const MonomialOrder& ord);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;  // PreconditionError on zero
  const Monomial& leading_monomial() const { return leading_term().mon; }
  std::uint32_t leading_coeff() const { return leading_term().coeff; }
  bool is_monic() const { return !is_zero() && terms_.front().coeff == 1; }
  bool is_homogeneous() const;
  int degree() const;  // max term degree; -1 for zero

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  std::vector<Term> terms_;

  friend Polynomial add(const Polynomial&, const Polynomial&, const PrimeField&,
                        const MonomialOrder&);
  friend Polynomial negated(const Polynomial&, const PrimeField&);
  friend Polynomial multiply_term(const Polynomial&, std::uint32_t, const Monomial&,
                                  const PrimeField&);
  friend Polynomial monic(const Polynomial&, const PrimeField&);
};

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& F,
               const MonomialOrder& ord);
Polynomial subtract(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                    const MonomialOrder& ord);
Polynomial negated(const Polynomial& a, const PrimeField& F);
/// a * (c * m). Multiplying every monomial by m preserves the term order.
Polynomial multiply_term(const Polynomial& a, std::uint32_t c, const Monomial& m,
                         const PrimeField& F);
Polynomial monic(const Polynomial& a, const PrimeField& F);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, no
/// remainder monomial divisible by any divisor's leading monomial. Divisors
/// are tried in the given sequence; PreconditionError on a zero divisor.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const PrimeField& F, const MonomialOrder& ord);

/// Remainder only (same reduction path as divide, without the bookkeeping).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  const PrimeField& F, const MonomialOrder& ord);

/// S(f, g) with both inputs scaled monic: lcm/lt(f)*f - lcm/lt(g)*g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& F,
                        const MonomialOrder& ord);

}  // namespace graphideal
