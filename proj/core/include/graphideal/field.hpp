#pragma once

#include <cstdint>

namespace graphideal {

/// Arithmetic in GF(p) with elements kept canonical in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);  // ValidationError unless p is prime

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;  // DivisionByZeroError on 0
  std::uint32_t reduce_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace graphideal
