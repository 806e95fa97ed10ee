#include "graphideal/monomial.hpp"

#include <algorithm>
#include <string>

#include "graphideal/errors.hpp"

namespace graphideal {

Monomial Monomial::variable(VarIndex v, int exp) {
  return from_factors({{v, exp}});
}

Monomial Monomial::from_factors(std::vector<std::pair<VarIndex, int>> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e < 0)
      throw ValidationError("negative exponent on variable index " +
                            std::to_string(v));
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

int Monomial::exponent(VarIndex v) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const std::pair<VarIndex, int>& f, VarIndex x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
      m.factors_.push_back(*ia++);
    else if (ia == a.factors_.end() || ib->first < ia->first)
      m.factors_.push_back(*ib++);
    else {
      m.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  auto it = m.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != m.factors_.end() && it->first < v) ++it;
    if (it == m.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial q;
  auto id = d.factors_.begin();
  for (const auto& [v, e] : factors_) {
    int sub = 0;
    while (id != d.factors_.end() && id->first < v)
      throw PreconditionError("monomial division with nonzero remainder");
    if (id != d.factors_.end() && id->first == v) sub = (id++)->second;
    if (sub > e)
      throw PreconditionError("monomial division with nonzero remainder");
    if (e > sub) {
      q.factors_.emplace_back(v, e - sub);
      q.degree_ += e - sub;
    }
  }
  if (id != d.factors_.end())
    throw PreconditionError("monomial division with nonzero remainder");
  return q;
}

bool Monomial::coprime(const Monomial& o) const {
  auto ia = factors_.begin(), ib = o.factors_.begin();
  while (ia != factors_.end() && ib != o.factors_.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else
      return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
      m.factors_.push_back(*ia++);
    else if (ia == a.factors_.end() || ib->first < ia->first)
      m.factors_.push_back(*ib++);
    else {
      m.factors_.emplace_back(ia->first, std::max(ia->second, ib->second));
      ++ia, ++ib;
    }
    m.degree_ += m.factors_.back().second;
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else {
      m.factors_.emplace_back(ia->first, std::min(ia->second, ib->second));
      m.degree_ += m.factors_.back().second;
      ++ia, ++ib;
    }
  }
  return m;
}

int Monomial::lcm_degree(const Monomial& a, const Monomial& b) {
  int deg = 0;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
      deg += (ia++)->second;
    else if (ia == a.factors_.end() || ib->first < ia->first)
      deg += (ib++)->second;
    else {
      deg += std::max(ia->second, ib->second);
      ++ia, ++ib;
    }
  }
  return deg;
}

}  // namespace graphideal
