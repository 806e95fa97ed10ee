#include "graphideal/polynomial.hpp"

#include <algorithm>

#include "graphideal/errors.hpp"

namespace graphideal {

Polynomial Polynomial::make(std::vector<Term> terms, const PrimeField& F,
                            const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mon, b.mon);
  });
  Polynomial p;
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % F.p();
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({c, std::move(t.mon)});
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (is_zero()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mon.degree() != terms_.front().mon.degree()) return false;
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& F,
               const MonomialOrder& ord) {
  Polynomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    int cmp = ord.compare(ia->mon, ib->mon);
    if (cmp > 0)
      out.terms_.push_back(*ia++);
    else if (cmp < 0)
      out.terms_.push_back(*ib++);
    else {
      std::uint32_t c = F.add(ia->coeff, ib->coeff);
      if (c != 0) out.terms_.push_back({c, ia->mon});
      ++ia, ++ib;
    }
  }
  out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
  out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
  return out;
}

Polynomial negated(const Polynomial& a, const PrimeField& F) {
  Polynomial out = a;
  for (auto& t : out.terms_) t.coeff = F.neg(t.coeff);
  return out;
}

Polynomial subtract(const Polynomial& a, const Polynomial& b, const PrimeField& F,
                    const MonomialOrder& ord) {
  return add(a, negated(b, F), F, ord);
}

Polynomial multiply_term(const Polynomial& a, std::uint32_t c, const Monomial& m,
                         const PrimeField& F) {
  Polynomial out;
  c %= F.p();
  if (c == 0) return out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_)
    out.terms_.push_back({F.mul(t.coeff, c), t.mon * m});
  return out;
}

Polynomial monic(const Polynomial& a, const PrimeField& F) {
  if (a.is_zero() || a.is_monic()) return a;
  return multiply_term(a, F.inv(a.leading_coeff()), Monomial(), F);
}

namespace {

// Shared reduction loop. `quotient_terms` may be null when only the remainder
// is wanted. The work polynomial's leading monomial strictly decreases, so
// quotient and remainder terms arrive already sorted; the tail past `pos` is
// rewritten in place by merging against the scaled divisor tail.
Polynomial divide_impl(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const PrimeField& F, const MonomialOrder& ord,
                       std::vector<std::vector<Term>>* quotient_terms) {
  for (const auto& d : divisors)
    if (d.is_zero()) throw PreconditionError("division by the zero polynomial");

  std::vector<Term> work(f.terms());
  std::size_t pos = 0;  // head of the still-active tail
  std::vector<Term> remainder_terms, scaled, next;
  while (pos < work.size()) {
    const Term lead = work[pos];
    const Polynomial* div = nullptr;
    std::size_t di = 0;
    for (std::size_t i = 0; i < divisors.size(); ++i)
      if (divisors[i].leading_monomial().divides(lead.mon)) {
        div = &divisors[i];
        di = i;
        break;
      }
    if (!div) {
      remainder_terms.push_back(std::move(work[pos]));
      ++pos;
      continue;
    }
    std::uint32_t c = F.mul(lead.coeff, F.inv(div->leading_coeff()));
    Monomial m = lead.mon.divided_by(div->leading_monomial());
    if (quotient_terms) (*quotient_terms)[di].push_back({c, m});
    // work[pos..] -= c*m*div; the leads cancel, the tails merge.
    const auto& dt = div->terms();
    scaled.clear();
    for (std::size_t k = 1; k < dt.size(); ++k)
      scaled.push_back({F.mul(dt[k].coeff, c), dt[k].mon * m});
    next.clear();
    std::size_t ia = pos + 1, ib = 0;
    while (ia < work.size() && ib < scaled.size()) {
      int cmp = ord.compare(work[ia].mon, scaled[ib].mon);
      if (cmp > 0) {
        next.push_back(std::move(work[ia++]));
      } else if (cmp < 0) {
        next.push_back({F.neg(scaled[ib].coeff), std::move(scaled[ib].mon)});
        ++ib;
      } else {
        std::uint32_t cc = F.sub(work[ia].coeff, scaled[ib].coeff);
        if (cc != 0) next.push_back({cc, std::move(work[ia].mon)});
        ++ia, ++ib;
      }
    }
    for (; ia < work.size(); ++ia) next.push_back(std::move(work[ia]));
    for (; ib < scaled.size(); ++ib)
      next.push_back({F.neg(scaled[ib].coeff), std::move(scaled[ib].mon)});
    work.swap(next);
    pos = 0;
  }
  return Polynomial::make(std::move(remainder_terms), F, ord);
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const PrimeField& F, const MonomialOrder& ord) {
  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  DivisionResult res;
  res.remainder = divide_impl(f, divisors, F, ord, &quotient_terms);
  for (auto& terms : quotient_terms)
    res.quotients.push_back(Polynomial::make(std::move(terms), F, ord));
  return res;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  const PrimeField& F, const MonomialOrder& ord) {
  return divide_impl(f, divisors, F, ord, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& F,
                        const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero())
    throw PreconditionError("s-polynomial of a zero polynomial");
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial sf = multiply_term(f, F.inv(f.leading_coeff()),
                                l.divided_by(f.leading_monomial()), F);
  Polynomial sg = multiply_term(g, F.inv(g.leading_coeff()),
                                l.divided_by(g.leading_monomial()), F);
  return subtract(sf, sg, F, ord);
}

}  // namespace graphideal
