#include "doctest.h"
#include "idealis/polynomial.hpp"

#include <vector>

using namespace idealis;

namespace {

// all monomials in nvars variables with total degree <= maxdeg
std::vector<Monomial> monomials_up_to(int nvars, int maxdeg) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  while (true) {
    int deg = 0;
    for (int e : exps) deg += e;
    if (deg <= maxdeg) out.emplace_back(exps);
    int i = 0;
    while (i < nvars) {
      if (++exps[static_cast<size_t>(i)] <= maxdeg) break;
      exps[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == nvars) return out;
  }
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("rationals normalize and obey field laws") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7).is_zero());
  CHECK(Rational(7, 7).is_one());
  CHECK(Rational(6, 3).is_integer());
  CHECK(!Rational(3, 6).is_integer());
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(3).inverse() * Rational(0).inverse(), Error);

  const Rational samples[] = {Rational(0),     Rational(1),      Rational(-1),
                              Rational(2, 3),  Rational(-7, 5),  Rational(10, 4),
                              Rational(-9, 6), Rational(123, 7), Rational(1, 100)};
  for (const Rational& a : samples)
    for (const Rational& b : samples) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
      for (const Rational& c : samples) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("monomial arithmetic and divisibility") {
  Monomial xy = mono({1, 1});
  Monomial x2 = mono({2, 0});
  CHECK(xy.degree() == 2);
  CHECK((xy * x2) == mono({3, 1}));
  CHECK(x2.divides(mono({3, 1})));
  CHECK(!xy.divides(x2));
  CHECK(mono({3, 1}).divide(x2) == xy);
  CHECK_THROWS_AS(x2.divide(xy), Error);
  CHECK(Monomial::lcm(xy, x2) == mono({2, 1}));
  CHECK(mono({2, 0}).coprime(mono({0, 3})));
  CHECK(!xy.coprime(x2));
  CHECK_THROWS_AS(mono({-1, 0}), Error);
  int big = std::numeric_limits<int>::max();
  CHECK_THROWS_AS(mono({big, 0}) * mono({big, 0}), Error);
  CHECK_THROWS_AS(xy * mono({1, 1, 1}), Error);
}

TEST_CASE("orders are total, multiplicative, and have 1 as minimum") {
  auto check_axioms = [](const MonomialOrder& ord, int nvars, int maxdeg) {
    std::vector<Monomial> ms = monomials_up_to(nvars, maxdeg);
    Monomial one = Monomial::one(nvars);
    for (const Monomial& u : ms) {
      CHECK(ord.compare(u, u) == 0);
      if (!u.is_one()) CHECK(ord.greater(u, one));
      for (const Monomial& v : ms) {
        int c = ord.compare(u, v);
        CHECK(c == -ord.compare(v, u));
        if (c == 0) CHECK(u == v);
        // multiplicative: u < v stays u*w < v*w
        if (c < 0)
          for (const Monomial& w : ms) CHECK(ord.less(u * w, v * w));
      }
    }
  };
  check_axioms(MonomialOrder::lex(), 2, 4);
  check_axioms(MonomialOrder::grevlex(), 2, 4);
  check_axioms(MonomialOrder::grevlex(), 3, 3);
  check_axioms(MonomialOrder::block_elim(1), 2, 4);
  check_axioms(MonomialOrder::block_elim(2), 3, 3);
}

TEST_CASE("frozen order comparisons") {
  MonomialOrder grevlex = MonomialOrder::grevlex();
  MonomialOrder lex = MonomialOrder::lex();
  // degree decides first in grevlex
  CHECK(grevlex.greater(mono({0, 4}), mono({3, 0})));
  CHECK(lex.greater(mono({3, 0}), mono({0, 4})));
  // at equal degree the earlier variable wins
  CHECK(grevlex.greater(mono({2, 1}), mono({1, 2})));
  CHECK(grevlex.greater(mono({1, 0}), mono({0, 1})));
  CHECK(lex.greater(mono({2, 1}), mono({1, 2})));
  // grevlex in three variables: x*z^2 < y^3 (same degree, less of the last)
  CHECK(MonomialOrder::grevlex().less(mono({1, 0, 2}), mono({0, 3, 0})));
  // block order: any power of the first block beats the second block
  MonomialOrder elim = MonomialOrder::block_elim(1);
  CHECK(elim.greater(mono({1, 0}), mono({0, 5})));
  CHECK(elim.less(mono({0, 5}), mono({1, 3})));
  CHECK_THROWS_AS(MonomialOrder::block_elim(0), Error);
}

TEST_CASE("polynomial arithmetic stays canonical") {
  int n = 2;
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial x = Polynomial::variable(n, ord, 0);
  Polynomial y = Polynomial::variable(n, ord, 1);

  Polynomial square = (x + y) * (x + y);
  Polynomial expect = x * x + x * y + x * y + y * y;
  CHECK(square == expect);
  CHECK(square.terms().size() == 3);
  CHECK(square.terms()[1].coeff == Rational(2));

  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x - x).is_zero());
  CHECK((x * y + y).leading_monomial() == mono({1, 1}));
  CHECK(square.total_degree() == 2);
  CHECK(Polynomial(n, ord).total_degree() == -1);
  CHECK(square.is_homogeneous());
  CHECK(!(square + x).is_homogeneous());
  CHECK(Polynomial(n, ord).is_homogeneous());

  Polynomial p = x.scaled(Rational(3)) + y;
  CHECK(p.monic().leading().coeff.is_one());
  CHECK(p.monic().terms()[1].coeff == Rational(1, 3));
  CHECK(p.times_term(Rational(2), mono({0, 1})) == (x * y).scaled(Rational(6)) + (y * y).scaled(Rational(2)));

  // duplicate and zero terms collapse on construction
  Polynomial merged = Polynomial::from_terms(
      n, ord, {{Rational(1), mono({1, 0})}, {Rational(2), mono({1, 0})}, {Rational(0), mono({0, 1})}});
  CHECK(merged == x.scaled(Rational(3)));

  // re-sorting under a different order flips the leading term
  Polynomial q = x + y * y;
  CHECK(q.leading_monomial() == mono({0, 2}));
  CHECK(q.with_order(MonomialOrder::lex()).leading_monomial() == mono({1, 0}));

  CHECK_THROWS_AS(x + Polynomial::variable(3, ord, 0), Error);
  CHECK_THROWS_AS(x + x.with_order(MonomialOrder::lex()), Error);
}

TEST_CASE("ring descriptors validate their pieces") {
  MonomialOrder ord = MonomialOrder::grevlex();
  RingDescriptor ring({"x", "y"}, ord);
  CHECK(ring.nvars() == 2);
  CHECK(ring.var_index("y") == 1);
  CHECK(!ring.var_index("z"));
  CHECK(!ring.is_quotient());
  CHECK_THROWS_AS(RingDescriptor({"x", "x"}, ord), Error);
  CHECK_THROWS_AS(RingDescriptor({"x"}, ord, {Polynomial(1, ord)}), Error);

  Polynomial x = Polynomial::variable(2, ord, 0);
  Polynomial y = Polynomial::variable(2, ord, 1);
  RingDescriptor quot({"x", "y"}, ord, {x * x + y * y});
  CHECK(quot.is_quotient());
  CHECK(quot.relations().size() == 1);
}

TEST_CASE("printing uses the variable names and rational coefficients") {
  MonomialOrder ord = MonomialOrder::grevlex();
  RingDescriptor ring({"x", "y"}, ord);
  Polynomial x = Polynomial::variable(2, ord, 0);
  Polynomial y = Polynomial::variable(2, ord, 1);
  Polynomial p = (x * x * y).scaled(Rational(3, 2)) - y * y * y * y + Polynomial::constant(2, ord, Rational(1));
  CHECK(to_string(p, ring) == "-y^4 + 3/2*x^2*y + 1");
  CHECK(to_string(Polynomial(2, ord), ring) == "0");
  CHECK(to_string(x - y, ring) == "x - y");
  CHECK(to_string(Monomial::one(2), ring) == "1");
  CHECK(to_string(mono({2, 1}), ring) == "x^2*y");
}
