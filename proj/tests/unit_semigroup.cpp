#include "doctest.h"
#include "idealis/ideal_theory.hpp"
#include "idealis/semigroup.hpp"

#include <memory>
#include <utility>
#include <vector>

using namespace idealis;

namespace {

SemigroupPtr sg(std::vector<int> gens) {
  return std::make_shared<const NumericalSemigroup>(std::move(gens));
}

// independent membership table: plain dynamic programming over the generators
std::vector<bool> naive_members(const std::vector<int>& gens, int limit) {
  std::vector<bool> in(static_cast<size_t>(limit) + 1, false);
  in[0] = true;
  for (int n = 1; n <= limit; ++n)
    for (int g : gens)
      if (g <= n && in[static_cast<size_t>(n - g)]) {
        in[static_cast<size_t>(n)] = true;
        break;
      }
  return in;
}

// x*B inside A, quantified over every exponent of B up to fmax
bool naive_colon_member(const SemiTermIdeal& A, const SemiTermIdeal& B, long n, long fmax) {
  if (!A.semigroup()->contains(n)) return false;
  for (long f = 0; f <= fmax; ++f)
    if (B.contains_exponent(f) && !A.contains_exponent(n + f)) return false;
  return true;
}

// least c with A(n+f) dividing c*B(f) wherever B has content; 0 when impossible
Integer naive_colon_need(const SemiTermIdealZ& A, const SemiTermIdealZ& B, long n, long fmax) {
  if (!A.semigroup()->contains(n)) return 0;
  Integer need = 1;
  for (long f = 0; f <= fmax; ++f) {
    Integer cb = B.content(f);
    if (cb == 0) continue;
    Integer ca = A.content(n + f);
    if (ca == 0) return 0;
    need = lcm(need, ca / gcd(ca, cb));
  }
  return need;
}

}  // namespace

TEST_CASE("frobenius numbers") {
  CHECK(sg({3, 4})->frobenius() == 5);
  CHECK(sg({3, 4, 5})->frobenius() == 2);
  CHECK(sg({1})->frobenius() == -1);
  CHECK(sg({2, 3})->frobenius() == 1);
  CHECK(sg({5, 7})->frobenius() == 23);
  CHECK(sg({6, 9, 20})->frobenius() == 43);
  CHECK(sg({4, 3, 4, 3})->frobenius() == 5);  // duplicates and order do not matter
}

TEST_CASE("bad semigroup inputs") {
  CHECK_THROWS_AS(NumericalSemigroup({}), Error);
  CHECK_THROWS_AS(NumericalSemigroup({2, 4}), Error);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), Error);
  CHECK_THROWS_AS(NumericalSemigroup({-3, 4}), Error);
}

TEST_CASE("membership agrees with the naive table") {
  for (const std::vector<int>& gens :
       {std::vector<int>{3, 4}, std::vector<int>{5, 7}, std::vector<int>{6, 9, 20}}) {
    SemigroupPtr s = sg(gens);
    std::vector<bool> table = naive_members(gens, 100);
    for (int n = 0; n <= 100; ++n) CHECK(s->contains(n) == table[static_cast<size_t>(n)]);
    CHECK(!s->contains(-1));
  }
}

TEST_CASE("term ideals keep only irreducible exponents") {
  SemigroupPtr s = sg({3, 4});
  SemiTermIdeal a(s, {6, 7, 9, 10});
  CHECK(a.min_exponents() == std::vector<int>{6, 7});
  CHECK(a.bound() == 7 + 5 + 1);
  CHECK(a.contains_exponent(13));
  CHECK(!a.contains_exponent(8));
  CHECK(!a.contains_exponent(5));

  CHECK_THROWS_AS(SemiTermIdeal(s, {5}), Error);   // 5 is a gap of <3,4>
  CHECK_THROWS_AS(SemiTermIdeal(s, {-3}), Error);

  SemiTermIdeal zero(s, {});
  CHECK(zero.is_zero());
  CHECK(zero.bound() == 0);
  CHECK(!zero.contains_exponent(6));
  CHECK(SemiTermIdeal(s, {0}).is_unit());
}

TEST_CASE("products and powers of term ideals") {
  SemigroupPtr s = sg({3, 4});
  SemiTermIdeal m(s, {3, 4});
  CHECK(sg_ideal_product(m, m).min_exponents() == std::vector<int>{6, 7, 8});
  CHECK(sg_ideal_power(m, 3).min_exponents() == std::vector<int>{9, 10, 11});
  CHECK(sg_ideal_equal(sg_ideal_power(m, 2), SemiTermIdeal(s, {6, 7, 8})));
  CHECK(sg_ideal_contains(m, sg_ideal_power(m, 2)));
  CHECK(!sg_ideal_contains(sg_ideal_power(m, 2), m));
  CHECK(sg_ideal_contains(m, SemiTermIdeal(s, {})));
  CHECK(!sg_ideal_contains(SemiTermIdeal(s, {}), m));
  CHECK_THROWS_AS(sg_ideal_power(m, 0), Error);
  CHECK_THROWS_AS(sg_ideal_product(m, SemiTermIdeal(sg({2, 3}), {2})), Error);
}

TEST_CASE("colon of term ideals matches the brute-force answer") {
  SemigroupPtr s = sg({3, 4});
  SemiTermIdeal m(s, {3, 4});
  SemiTermIdeal m2 = sg_ideal_power(m, 2);
  SemiTermIdeal m3 = sg_ideal_power(m, 3);
  SemiTermIdeal t3m(s, {6, 7});

  CHECK(sg_ideal_equal(sg_colon(m3, m), m2));
  CHECK(sg_ideal_equal(sg_colon(sg_ideal_power(t3m, 2), t3m), m2));

  for (const auto& [A, B] : {std::pair(m3, m), std::pair(m2, t3m), std::pair(t3m, m2),
                             std::pair(m, m), std::pair(sg_ideal_power(t3m, 3), t3m)}) {
    SemiTermIdeal C = sg_colon(A, B);
    for (long n = 0; n <= 60; ++n) CHECK(C.contains_exponent(n) == naive_colon_member(A, B, n, 80));
  }

  CHECK_THROWS_AS(sg_colon(m, SemiTermIdeal(s, {})), Error);
  CHECK(sg_colon(SemiTermIdeal(s, {}), m).is_zero());
}

TEST_CASE("power scan over a semigroup ring") {
  SemigroupPtr s = sg({3, 4});
  SemiTermIdeal m2(s, {6, 7, 8});
  SemiTermIdeal t3m(s, {6, 7});
  SgPowerScanReport rep = sg_power_scan(t3m, m2, 5);
  CHECK(rep.least_equal_n == 2);
  CHECK(rep.persistence_verified);
  REQUIRE(rep.per_n.size() == 5);
  CHECK(!rep.per_n[0].second);
  for (size_t i = 1; i < rep.per_n.size(); ++i) CHECK(rep.per_n[i].second);

  CHECK_THROWS_AS(sg_power_scan(m2, t3m, 4), Error);   // not contained
  CHECK_THROWS_AS(sg_power_scan(t3m, t3m, 4), Error);  // equal
  CHECK_THROWS_AS(sg_power_scan(t3m, m2, 0), Error);
}

TEST_CASE("closures of monomial ideals in the semigroup ring") {
  SemigroupPtr s = sg({3, 4});
  SemiTermIdeal m(s, {3, 4});
  for (int k = 1; k <= 5; ++k) {
    SemiTermIdeal mk = sg_ideal_power(m, k);
    SgRRClosureResult<SemiTermIdeal> rr = sg_ratliff_rush(mk, 8, 2);
    CHECK(sg_ideal_equal(rr.closure, mk));
    CHECK(rr.stabilized_at_m == 1);
    CHECK(rr.heuristic);
  }

  // t^3*m misses t^8 but its closure is the full square of the maximal ideal
  SemiTermIdeal t3m(s, {6, 7});
  SgRRClosureResult<SemiTermIdeal> rr = sg_ratliff_rush(t3m, 8, 2);
  CHECK(sg_ideal_equal(rr.closure, SemiTermIdeal(s, {6, 7, 8})));
  CHECK(rr.chain.size() == 3);
  for (size_t i = 1; i < rr.chain.size(); ++i)
    CHECK(sg_ideal_contains(rr.chain[i], rr.chain[i - 1]));

  CHECK_THROWS_AS(sg_ratliff_rush(SemiTermIdeal(s, {}), 8, 2), Error);
  CHECK_THROWS_AS(sg_ratliff_rush(SemiTermIdeal(s, {0}), 8, 2), Error);
  CHECK_THROWS_AS(sg_ratliff_rush(t3m, 1, 2), Error);  // chain too short to settle
}

TEST_CASE("integer term ideals carry a content function") {
  SemigroupPtr s = sg({3, 4, 5});
  SemiTermIdealZ I = SemiTermIdealZ::from_generators(s, {{3, 1}, {4, 1}, {5, 2}});
  CHECK(I.content(0) == 0);
  CHECK(I.content(2) == 0);
  CHECK(I.content(3) == 1);
  CHECK(I.content(4) == 1);
  CHECK(I.content(5) == 2);
  CHECK(I.content(6) == 1);
  CHECK(I.content(100) == 1);
  CHECK(I.content(-1) == 0);
  CHECK(I.window_size() == 6);
  CHECK(I.eventual_content() == 1);

  // minimal generating terms come back exactly as fed in
  std::vector<std::pair<int, Integer>> gens = I.generators();
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == std::pair<int, Integer>(3, 1));
  CHECK(gens[1] == std::pair<int, Integer>(4, 1));
  CHECK(gens[2] == std::pair<int, Integer>(5, 2));
  CHECK(SemiTermIdealZ::from_generators(s, gens) == I);

  CHECK_THROWS_AS(SemiTermIdealZ::from_generators(s, {{3, 0}}), Error);
  CHECK_THROWS_AS(SemiTermIdealZ::from_generators(s, {{2, 1}}), Error);
  CHECK_THROWS_AS(SemiTermIdealZ(s, {Integer(0), Integer(1)}, 1), Error);
  CHECK(SemiTermIdealZ::from_generators(s, {}).is_zero());
}

TEST_CASE("integer term ideals normalize their windows") {
  SemigroupPtr s = sg({3, 4, 5});
  SemiTermIdealZ J = SemiTermIdealZ::from_generators(s, {{3, 1}, {4, 1}, {5, 1}});
  CHECK(J.window_size() == 1);
  CHECK(J.eventual_content() == 1);

  // a longer window spelling out the same rule collapses to the same object
  std::vector<Integer> padded = {0, 0, 0, 1, 1, 1, 1, 1, 1, 1};
  CHECK(SemiTermIdealZ(s, padded, 1) == J);
  // signs are stripped: contents are ideals of Z
  CHECK(SemiTermIdealZ(s, {0, 0, 0, -2}, -4) == SemiTermIdealZ(s, {0, 0, 0, 2}, 4));

  SemiTermIdealZ one = SemiTermIdealZ::from_generators(s, {{5, 2}});
  CHECK(one.content(5) == 2);
  CHECK(one.content(8) == 2);
  CHECK(one.content(9) == 2);
  CHECK(one.content(6) == 0);
  CHECK(one.eventual_content() == 2);
}

TEST_CASE("integer term ideal arithmetic") {
  SemigroupPtr s = sg({3, 4, 5});
  SemiTermIdealZ I = SemiTermIdealZ::from_generators(s, {{3, 1}, {4, 1}, {5, 2}});
  SemiTermIdealZ J = SemiTermIdealZ::from_generators(s, {{3, 1}, {4, 1}, {5, 1}});
  SemiTermIdealZ E = SemiTermIdealZ::from_generators(s, {{6, 1}, {7, 1}, {8, 1}});

  CHECK(sg_ideal_contains(J, I));
  CHECK(!sg_ideal_contains(I, J));
  CHECK(!sg_ideal_equal(I, J));
  CHECK(sg_ideal_equal(sg_ideal_power(I, 2), sg_ideal_power(J, 2)));
  CHECK(sg_ideal_equal(sg_ideal_power(I, 2), E));

  SgPowerScanReport rep = sg_power_scan(I, J, 4);
  CHECK(rep.least_equal_n == 2);
  CHECK(rep.persistence_verified);

  SgRRClosureResult<SemiTermIdealZ> rr = sg_ratliff_rush(I, 8, 2);
  CHECK(sg_ideal_equal(rr.closure, J));
  CHECK(rr.stabilized_at_m == 1);

  CHECK_THROWS_AS(sg_ratliff_rush(SemiTermIdealZ::from_generators(s, {{0, 1}}), 8, 2), Error);
  CHECK_THROWS_AS(sg_ratliff_rush(SemiTermIdealZ::from_generators(s, {}), 8, 2), Error);
}

TEST_CASE("integer colon matches the brute-force contents") {
  SemigroupPtr s = sg({3, 4, 5});
  SemiTermIdealZ I = SemiTermIdealZ::from_generators(s, {{3, 1}, {4, 1}, {5, 2}});
  SemiTermIdealZ J = SemiTermIdealZ::from_generators(s, {{3, 1}, {4, 1}, {5, 1}});
  SemiTermIdealZ I2 = sg_ideal_power(I, 2);
  SemigroupPtr s34 = sg({3, 4});
  SemiTermIdealZ mixed = SemiTermIdealZ::from_generators(s34, {{6, 2}, {7, 3}});
  SemiTermIdealZ small = SemiTermIdealZ::from_generators(s34, {{3, 1}, {4, 6}});

  for (const auto& [A, B] : {std::pair(I2, I), std::pair(J, I), std::pair(I, J),
                             std::pair(mixed, small), std::pair(small, mixed)}) {
    SemiTermIdealZ C = sg_colon(A, B);
    for (long n = 0; n <= 40; ++n) CHECK(C.content(n) == naive_colon_need(A, B, n, 120));
  }

  CHECK_THROWS_AS(sg_colon(I, SemiTermIdealZ::from_generators(s, {})), Error);
  CHECK(sg_colon(SemiTermIdealZ::from_generators(s, {}), I).is_zero());
}

TEST_CASE("printing term ideals") {
  SemigroupPtr s = sg({3, 4});
  CHECK(to_string(SemiTermIdeal(s, {6, 7})) == "ideal(t^6, t^7)");
  CHECK(to_string(SemiTermIdeal(s, {})) == "ideal()");
  SemigroupPtr s345 = sg({3, 4, 5});
  CHECK(to_string(SemiTermIdealZ::from_generators(s345, {{3, 1}, {4, 1}, {5, 2}})) ==
        "ideal(1*t^3, 1*t^4, 2*t^5)");
  CHECK(to_string(SemiTermIdealZ::from_generators(s345, {})) == "ideal()");
}

TEST_CASE("the trivial semigroup ring mirrors the univariate polynomial ring") {
  SemigroupPtr s1 = sg({1});
  RingPtr R = std::make_shared<const RingDescriptor>(std::vector<std::string>{"x"},
                                                     MonomialOrder::grevlex());
  auto xpow = [&](int k) {
    return Polynomial::term(R->order(), Rational(1), Monomial(std::vector<int>{k}));
  };

  for (int a = 0; a <= 12; ++a) {
    SemiTermIdeal A(s1, {a});
    Ideal PA(R, {xpow(a)});
    for (int b = 0; b <= 12; ++b) {
      SemiTermIdeal B(s1, {b});
      Ideal PB(R, {xpow(b)});
      CHECK(sg_ideal_equal(A, B) == ideal_equal(PA, PB));
      CHECK(sg_ideal_contains(A, B) == ideal_contains(PA, PB));
      CHECK(sg_ideal_product(A, B).min_exponents() == std::vector<int>{a + b});
    }
    for (int n = 0; n <= 12; ++n)
      CHECK(A.contains_exponent(n) == is_member(xpow(n), PA));
  }

  // the two engines also agree on a full power scan
  SemiTermIdeal I(s1, {2});
  SemiTermIdeal J(s1, {1});
  Ideal PI(R, {xpow(2)});
  Ideal PJ(R, {xpow(1)});
  SgPowerScanReport sg_rep = sg_power_scan(I, J, 4);
  PowerScanReport poly_rep = power_scan(PI, PJ, 4);
  CHECK(sg_rep.per_n == poly_rep.per_n);
  CHECK(!sg_rep.least_equal_n);
  CHECK(!poly_rep.least_equal_n);
}
