#include "graphideal/poly_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "graphideal/errors.hpp"

namespace graphideal {

std::string monomial_to_string(const Monomial& m, const VariableSpace& space) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << space.var_name(v);
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string to_string(const Polynomial& f, const VariableSpace& space,
                      const PrimeField& F) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    // Symmetric representative: coefficients above p/2 print as subtractions.
    bool negative = t.coeff > F.p() / 2;
    std::uint32_t mag = negative ? F.p() - t.coeff : t.coeff;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (t.mon.is_one())
      os << mag;
    else if (mag != 1)
      os << mag << '*' << monomial_to_string(t.mon, space);
    else
      os << monomial_to_string(t.mon, space);
  }
  return os.str();
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  long long integer() {
    skip_space();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_)
      throw ParseError("expected an integer at position " + std::to_string(pos_));
    pos_ = ptr - text_.data();
    return value;
  }

  std::string_view name() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start)
      throw ParseError("expected a variable at position " + std::to_string(pos_));
    return text_.substr(start, pos_ - start);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableSpace& space,
                            const PrimeField& F, const MonomialOrder& ord) {
  Scanner sc(text);
  if (sc.done()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  bool first = true;
  while (!sc.done()) {
    std::uint32_t sign = 1;
    if (sc.consume('-'))
      sign = F.neg(1);
    else if (sc.consume('+')) {
      if (first) throw ParseError("polynomial starts with '+'");
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(sc.pos()));
    }
    first = false;

    std::uint32_t coeff = sign;
    std::vector<std::pair<VarIndex, int>> factors;
    while (true) {
      char c = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = F.mul(coeff, F.reduce_int(sc.integer()));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        auto nm = sc.name();
        auto var = space.var_by_name(nm);
        if (!var) throw ParseError("unknown variable '" + std::string(nm) + "'");
        long long exp = 1;
        if (sc.consume('^')) {
          exp = sc.integer();
          if (exp < 0 || exp > 1000000) throw ParseError("exponent out of range");
        }
        factors.emplace_back(*var, static_cast<int>(exp));
      } else {
        throw ParseError("expected a factor at position " + std::to_string(sc.pos()));
      }
      if (!sc.consume('*')) break;
    }
    terms.push_back({coeff, Monomial::from_factors(std::move(factors))});
  }
  return Polynomial::make(std::move(terms), F, ord);
}

}  // namespace graphideal
