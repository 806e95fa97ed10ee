#pragma once

#include <utility>
#include <vector>

namespace graphideal {

using VarIndex = int;

/// Sparse monomial: sorted (variable, exponent) pairs with positive exponents
/// and a cached total degree.
class Monomial {
 public:
  Monomial() = default;  // the monomial 1

  static Monomial variable(VarIndex v, int exp = 1);
  /// Merges duplicates, drops zero exponents; ValidationError on negatives.
  static Monomial from_factors(std::vector<std::pair<VarIndex, int>> factors);

  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(VarIndex v) const;
  const std::vector<std::pair<VarIndex, int>>& factors() const { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& m) const;
  /// this / d; PreconditionError unless d divides this.
  Monomial divided_by(const Monomial& d) const;
  bool coprime(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static int lcm_degree(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::pair<VarIndex, int>> factors_;
  int degree_ = 0;
};

}  // namespace graphideal
