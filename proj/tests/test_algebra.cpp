#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "graphideal/errors.hpp"
#include "graphideal/field.hpp"
#include "graphideal/monomial.hpp"
#include "graphideal/order.hpp"
#include "graphideal/poly_io.hpp"
#include "graphideal/polynomial.hpp"
#include "graphideal/varspace.hpp"
#include "testutil.hpp"

using namespace graphideal;

TEST_CASE("prime field arithmetic") {
  CHECK_THROWS_AS(PrimeField(0), ValidationError);
  CHECK_THROWS_AS(PrimeField(1), ValidationError);
  CHECK_THROWS_AS(PrimeField(4), ValidationError);
  CHECK_THROWS_AS(PrimeField(91), ValidationError);  // 7 * 13

  PrimeField F(7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.neg(3) == 4);
  CHECK(F.neg(0) == 0);
  CHECK(F.mul(5, 5) == 4);
  CHECK(F.reduce_int(-1) == 6);
  CHECK(F.reduce_int(700000000001LL) == F.reduce_int(700000000001LL % 7));

  for (std::uint32_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(F.inv(0), DivisionByZeroError);

  PrimeField F2(2);
  CHECK(F2.add(1, 1) == 0);
  CHECK(F2.inv(1) == 1);
}

TEST_CASE("monomial construction and divisibility") {
  Monomial one;
  CHECK(one.is_one());
  CHECK(one.degree() == 0);

  Monomial m = Monomial::from_factors({{2, 1}, {0, 2}, {2, 1}, {5, 0}});
  CHECK(m.degree() == 4);
  CHECK(m.exponent(0) == 2);
  CHECK(m.exponent(2) == 2);
  CHECK(m.exponent(5) == 0);
  CHECK(m.factors() == std::vector<std::pair<VarIndex, int>>{{0, 2}, {2, 2}});
  CHECK_THROWS_AS(Monomial::from_factors({{1, -1}}), ValidationError);

  Monomial a = Monomial::variable(0) * Monomial::variable(1, 2);
  Monomial b = Monomial::variable(1);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(one.divides(a));
  CHECK(a.divided_by(b) == Monomial::from_factors({{0, 1}, {1, 1}}));
  CHECK(a.divided_by(a).is_one());
  CHECK_THROWS_AS(b.divided_by(a), PreconditionError);
  CHECK_THROWS_AS(a.divided_by(Monomial::variable(7)), PreconditionError);

  CHECK(Monomial::variable(0).coprime(Monomial::variable(1)));
  CHECK_FALSE(a.coprime(b));

  Monomial x2y = Monomial::from_factors({{0, 2}, {1, 1}});
  Monomial xz = Monomial::from_factors({{0, 1}, {2, 1}});
  CHECK(Monomial::lcm(x2y, xz) == Monomial::from_factors({{0, 2}, {1, 1}, {2, 1}}));
  CHECK(Monomial::gcd(x2y, xz) == Monomial::variable(0));
  CHECK(Monomial::lcm_degree(x2y, xz) == 4);
}

TEST_CASE("monomial orders") {
  // three variables, precedence 0 > 1 > 2
  auto grevlex = MonomialOrder::grevlex({0, 1, 2});
  auto lex = MonomialOrder::lex({0, 1, 2});

  Monomial x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  Monomial x0z2 = Monomial::from_factors({{0, 1}, {2, 1}});
  Monomial y2 = Monomial::variable(1, 2);

  SUBCASE("degree decides first under grevlex") {
    CHECK(grevlex.greater(y2, x));
    CHECK(grevlex.less(x, x0z2));
  }
  SUBCASE("grevlex tie-break: smaller exponent on the least variable wins") {
    CHECK(grevlex.greater(y2, x0z2));  // z-exponent 0 beats 1
    CHECK(grevlex.greater(Monomial::from_factors({{0, 1}, {1, 1}}), y2));
    CHECK(grevlex.compare(y2, y2) == 0);
  }
  SUBCASE("lex ignores degree") {
    CHECK(lex.greater(x, Monomial::variable(1, 5)));
    CHECK(lex.greater(x0z2, y2));
    CHECK(lex.less(z, y));
  }
  SUBCASE("elimination block order") {
    auto elim = MonomialOrder::block_elimination({0, 1}, {2});
    CHECK(elim.greater(y, Monomial::variable(2, 9)));
    CHECK(elim.less(z, x));
    // within a block it is grevlex
    CHECK(elim.greater(Monomial::from_factors({{0, 1}, {1, 1}}), Monomial::variable(1, 2)) ==
          grevlex.greater(Monomial::from_factors({{0, 1}, {1, 1}}), y2));
  }
  SUBCASE("variables outside the order are rejected") {
    CHECK_THROWS_AS(grevlex.compare(Monomial::variable(3), x), PreconditionError);
  }
  SUBCASE("duplicate or negative precedence entries are rejected") {
    CHECK_THROWS_AS(MonomialOrder::grevlex({0, 0}), ValidationError);
    CHECK_THROWS_AS(MonomialOrder::lex({-1}), ValidationError);
  }
}

namespace {

// small fixture: path graph gives vars t1_2=0, t2_3=1, t3_4=2, x1..x4=3..6, z=7
struct Ring {
  Graph g = testutil::make_graph({{1, 2}, {2, 3}, {3, 4}});
  VariableSpace space = VariableSpace::for_graph(g);
  PrimeField F{7};
  MonomialOrder ord = space.t_order();

  Polynomial parse(const std::string& s) const {
    return parse_polynomial(s, space, F, ord);
  }
  std::string str(const Polynomial& f) const { return to_string(f, space, F); }
};

}  // namespace

TEST_CASE("variable space bookkeeping") {
  Ring R;
  CHECK(R.space.num_vars() == 8);
  CHECK(R.space.t_var(0) == 0);
  CHECK(R.space.t_var(Edge{2, 3}) == 1);
  CHECK(R.space.x_var(1) == 3);
  CHECK(R.space.z_var() == 7);
  CHECK(R.space.is_t_var(2));
  CHECK_FALSE(R.space.is_t_var(3));
  CHECK(R.space.edge_of(1) == Edge{2, 3});
  CHECK(R.space.var_name(0) == "t1_2");
  CHECK(R.space.var_name(4) == "x2");
  CHECK(R.space.var_name(7) == "z");
  CHECK(R.space.var_by_name("t3_4") == 2);
  CHECK(R.space.var_by_name("t4_3") == 2);  // endpoint order is normalized
  CHECK(R.space.var_by_name("x4") == 6);
  CHECK(R.space.var_by_name("z") == 7);
  CHECK_FALSE(R.space.var_by_name("t1_3").has_value());
  CHECK_FALSE(R.space.var_by_name("x9").has_value());
  CHECK_FALSE(R.space.var_by_name("w").has_value());
  CHECK(R.space.t_order_description() == "grevlex(t1_2>t2_3>t3_4)");

  SUBCASE("custom edge precedence") {
    auto s2 = VariableSpace::for_graph(R.g, {{3, 4}, {1, 2}, {2, 3}});
    CHECK(s2.t_precedence() == std::vector<VarIndex>{2, 0, 1});
    CHECK(s2.t_order_description() == "grevlex(t3_4>t1_2>t2_3)");
    CHECK_THROWS_AS(VariableSpace::for_graph(R.g, {{1, 2}}), ValidationError);
    CHECK_THROWS_AS(VariableSpace::for_graph(R.g, {{1, 2}, {2, 3}, {1, 2}}),
                    ValidationError);
  }
}

TEST_CASE("polynomial construction normalizes") {
  Ring R;
  Monomial t0 = Monomial::variable(0);

  SUBCASE("coefficients reduce and equal monomials merge") {
    Polynomial f = Polynomial::make({{9, t0}, {5, t0}}, R.F, R.ord);  // 9+5 = 0 mod 7
    CHECK(f.is_zero());
    Polynomial g = Polynomial::make({{3, t0}, {5, Monomial()}}, R.F, R.ord);
    CHECK(g.term_count() == 2);
    CHECK(g.leading_term().coeff == 3);
    CHECK(g.leading_monomial() == t0);
  }
  SUBCASE("terms sort descending under the given order") {
    Polynomial f = R.parse("t3_4 + t1_2^2 + t2_3");
    CHECK(f.leading_monomial() == Monomial::variable(0, 2));
    CHECK(f.degree() == 2);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(R.str(f) == "t1_2^2 + t2_3 + t3_4");
  }
  SUBCASE("leading term of zero is an error") {
    CHECK_THROWS_AS(Polynomial().leading_term(), PreconditionError);
    CHECK(Polynomial().degree() == -1);
  }
}

TEST_CASE("polynomial arithmetic") {
  Ring R;
  Polynomial f = R.parse("t1_2^2 + 3*t2_3");
  Polynomial g = R.parse("t1_2^2 - t3_4");

  CHECK(R.str(subtract(f, g, R.F, R.ord)) == "3*t2_3 + t3_4");
  CHECK(R.str(add(f, negated(f, R.F), R.F, R.ord)) == "0");
  CHECK(add(f, negated(f, R.F), R.F, R.ord).is_zero());

  Polynomial h = multiply_term(f, 2, Monomial::variable(2), R.F);
  CHECK(R.str(h) == "2*t1_2^2*t3_4 - t2_3*t3_4");  // 6 = -1 mod 7
  CHECK(R.parse("t1_2^2 - t2_3*t3_4").is_homogeneous());
  CHECK_FALSE(h.is_homogeneous());

  Polynomial m = monic(R.parse("3*t1_2 + t2_3"), R.F);
  CHECK(m.is_monic());
  CHECK(R.str(m) == "t1_2 - 2*t2_3");  // 1/3 = 5 = -2 mod 7
}

TEST_CASE("division against a divisor list") {
  Ring R;
  // classic lex example: x^2 y + x y^2 + y^2 against [x y - 1, y^2 - 1]
  auto lex = MonomialOrder::lex({0, 1, 2, 3, 4, 5, 6, 7});
  Polynomial f = parse_polynomial("t1_2^2*t2_3 + t1_2*t2_3^2 + t2_3^2", R.space, R.F, lex);
  std::vector<Polynomial> divisors = {
      parse_polynomial("t1_2*t2_3 - 1", R.space, R.F, lex),
      parse_polynomial("t2_3^2 - 1", R.space, R.F, lex)};

  auto res = divide(f, divisors, R.F, lex);
  CHECK(to_string(res.remainder, R.space, R.F) == "t1_2 + t2_3 + 1");
  CHECK(to_string(res.quotients[0], R.space, R.F) == "t1_2 + t2_3");
  CHECK(to_string(res.quotients[1], R.space, R.F) == "1");

  SUBCASE("the identity f = sum q_i d_i + r holds") {
    Polynomial acc = res.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      for (const Term& t : res.quotients[i].terms()) {
        acc = add(acc, multiply_term(divisors[i], t.coeff, t.mon, R.F), R.F, lex);
      }
    }
    CHECK(acc == f);
  }
  SUBCASE("no remainder monomial is divisible by a divisor lead") {
    for (const Term& t : res.remainder.terms()) {
      for (const Polynomial& d : divisors) {
        CHECK_FALSE(d.leading_monomial().divides(t.mon));
      }
    }
  }
  SUBCASE("zero divisors are rejected") {
    CHECK_THROWS_AS(divide(f, {Polynomial()}, R.F, lex), PreconditionError);
  }
  CHECK(reduce(f, divisors, R.F, lex) == res.remainder);
}

TEST_CASE("s-polynomial cancels leading terms") {
  Ring R;
  Polynomial f = R.parse("t1_2^2 - t2_3");
  Polynomial g = R.parse("t1_2*t2_3 - t3_4");
  Polynomial s = s_polynomial(f, g, R.F, R.ord);
  // lcm = t1_2^2 t2_3; s = t2_3*f - t1_2*g; t2_3^2 leads under grevlex
  CHECK(R.str(s) == "-t2_3^2 + t1_2*t3_4");

  // s-polynomial of monomials with equal support product vanishes
  Polynomial a = R.parse("t1_2^2");
  Polynomial b = R.parse("t1_2*t2_3");
  CHECK(s_polynomial(a, b, R.F, R.ord).is_zero());
}

TEST_CASE("text round trip") {
  Ring R;
  SUBCASE("canonical strings survive parse -> print") {
    for (const char* s : {
             "t1_2^2 - t2_3^2",
             "t1_2*t2_3*t3_4",
             "2*t1_2^3 + 3*t2_3 - 1",
             "0",
             "1",
             "-t1_2 + 1",  // sign on the leading coefficient
         }) {
      CAPTURE(s);
      CHECK(R.str(R.parse(s)) == s);
    }
    // vertex variables need the full elimination order
    auto elim = R.space.elimination_order();
    for (const char* s : {"x1^2 - x4^2", "x1*x2*z - t1_2"}) {
      CAPTURE(s);
      Polynomial f = parse_polynomial(s, R.space, R.F, elim);
      CHECK(to_string(f, R.space, R.F) == s);
    }
  }
  SUBCASE("loose input is normalized") {
    CHECK(R.str(R.parse("t2_3 * t1_2")) == "t1_2*t2_3");
    CHECK(R.str(R.parse("t1_2^1+0*t2_3")) == "t1_2");
    CHECK(R.str(R.parse("10*t1_2")) == "3*t1_2");
    CHECK(R.str(R.parse("2*3*t1_2")) == "-t1_2");  // 6 = -1 mod 7
  }
  SUBCASE("symmetric representative picks the small magnitude") {
    CHECK(R.str(R.parse("5*t1_2 + 6*t2_3")) == "-2*t1_2 - t2_3");
    PrimeField F2(2);
    Polynomial f = parse_polynomial("t1_2 - t2_3", R.space, F2, R.ord);
    CHECK(to_string(f, R.space, F2) == "t1_2 + t2_3");
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(R.parse("w + 1"), ParseError);
    CHECK_THROWS_AS(R.parse("t1_2^"), ParseError);
    CHECK_THROWS_AS(R.parse("t1_2 +"), ParseError);
    CHECK_THROWS_AS(R.parse(""), ParseError);
    CHECK_THROWS_AS(R.parse("t1_2^9999999"), ParseError);
    CHECK_THROWS_AS(R.parse("t1_2 t2_3"), ParseError);  // missing '*'
    CHECK_THROWS_AS(R.parse("+t1_2"), ParseError);      // leading '+'
  }
}
