#include "graphideal/field.hpp"

#include <string>

#include "graphideal/errors.hpp"

namespace graphideal {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  bool prime = p >= 2;
  for (std::uint32_t d = 2; prime && d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime)
    throw ValidationError("field characteristic must be prime, got " +
                          std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" +
                                        std::to_string(p_) + ")");
  // Extended Euclid on (a, p); p prime so gcd is 1.
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

}  // namespace graphideal
