#include "doctest.h"
#include "idealis/ideal.hpp"

#include <vector>

using namespace idealis;

namespace {

struct Plane {
  RingPtr ring;
  Polynomial x, y;
  Plane()
      : ring(std::make_shared<const RingDescriptor>(std::vector<std::string>{"x", "y"},
                                                    MonomialOrder::grevlex())),
        x(Polynomial::variable(2, ring->order(), 0)),
        y(Polynomial::variable(2, ring->order(), 1)) {}
  Ideal ideal(std::vector<Polynomial> gens) const { return Ideal(ring, std::move(gens)); }
};

}  // namespace

TEST_CASE("sum, product and power") {
  Plane p;
  Ideal X = p.ideal({p.x});
  Ideal Y = p.ideal({p.y});
  CHECK(ideal_equal(ideal_sum(X, Y), p.ideal({p.x, p.y})));
  CHECK(ideal_equal(ideal_product(X, Y), p.ideal({p.x * p.y})));
  Ideal m = p.ideal({p.x, p.y});
  CHECK(ideal_equal(ideal_power(m, 2), p.ideal({p.x * p.x, p.x * p.y, p.y * p.y})));
  CHECK(ideal_equal(ideal_power(m, 3),
                    p.ideal({p.x * p.x * p.x, p.x * p.x * p.y, p.x * p.y * p.y, p.y * p.y * p.y})));
  CHECK(ideal_equal(ideal_power(m, 1), m));
  CHECK_THROWS_AS(ideal_power(m, 0), Error);
}

TEST_CASE("equality ignores the presentation") {
  Plane p;
  CHECK(ideal_equal(p.ideal({p.x * p.x, p.x * p.x + p.y * p.y}), p.ideal({p.x * p.x, p.y * p.y})));
  CHECK(!ideal_equal(p.ideal({p.x}), p.ideal({p.x * p.x})));
  CHECK(ideal_equal(p.ideal({p.x, p.x}), p.ideal({p.x.scaled(Rational(5, 3))})));
  CHECK(ideal_equal(p.ideal({}), p.ideal({Polynomial(2, p.ring->order())})));
}

TEST_CASE("containment and membership") {
  Plane p;
  Ideal big = p.ideal({p.x, p.y});
  Ideal small = p.ideal({p.x * p.y, p.x * p.x});
  CHECK(ideal_contains(big, small));
  CHECK(!ideal_contains(small, big));
  CHECK(ideal_contains(big, big));
  CHECK(is_member(p.x * p.x * p.y, small));
  CHECK(!is_member(p.y * p.y, small));
  CHECK(is_member(Polynomial(2, p.ring->order()), small));
}

TEST_CASE("intersection") {
  Plane p;
  CHECK(ideal_equal(ideal_intersect(p.ideal({p.x * p.x}), p.ideal({p.x * p.y})),
                    p.ideal({p.x * p.x * p.y})));
  CHECK(ideal_equal(ideal_intersect(p.ideal({p.x}), p.ideal({p.y})), p.ideal({p.x * p.y})));
  // x is prime, so a multiple of x + y lands in (x) only when the cofactor does
  Ideal meet = ideal_intersect(p.ideal({p.x}), p.ideal({p.x + p.y}));
  CHECK(ideal_equal(meet, p.ideal({p.x * p.x + p.x * p.y})));
  // the intersection is inside both
  CHECK(ideal_contains(p.ideal({p.x}), meet));
  CHECK(ideal_contains(p.ideal({p.x + p.y}), meet));
  // nested ideals intersect in the smaller one
  CHECK(ideal_equal(ideal_intersect(p.ideal({p.x, p.y}), p.ideal({p.x - p.y})),
                    p.ideal({p.x - p.y})));
}

TEST_CASE("colon quotients") {
  Plane p;
  CHECK(ideal_equal(ideal_colon(p.ideal({p.x * p.x * p.y, p.y * p.y}), p.ideal({p.y})),
                    p.ideal({p.x * p.x, p.y})));
  CHECK(ideal_equal(ideal_colon(p.ideal({p.x * p.y}), p.ideal({p.x, p.y})), p.ideal({p.x * p.y})));
  // an ideal colon itself always contains 1
  CHECK(ideal_colon(p.ideal({p.x}), p.ideal({p.x})).is_unit());
  CHECK_THROWS_AS(ideal_colon(p.ideal({p.x}), p.ideal({})), Error);
  // (I : J) * J sits inside I
  Ideal I = p.ideal({p.x * p.x, p.x * p.y});
  Ideal J = p.ideal({p.x + p.y});
  Ideal C = ideal_colon(I, J);
  CHECK(ideal_contains(I, ideal_product(C, J)));
}

TEST_CASE("radical membership and equality") {
  Plane p;
  Ideal I = p.ideal({p.x * p.x});
  CHECK(radical_member(p.x, I));
  CHECK(!radical_member(p.y, I));
  CHECK(radical_member(p.x * p.x * p.y, p.ideal({p.x * p.y * p.y})));
  CHECK(radical_equal(p.ideal({p.x * p.x, p.y}), p.ideal({p.x, p.y * p.y})));
  CHECK(!radical_equal(p.ideal({p.x}), p.ideal({p.x, p.y})));
  CHECK(radical_equal(p.ideal({p.x}), p.ideal({p.x})));
}

TEST_CASE("dimension of the quotient by an ideal") {
  Plane p;
  CHECK(dimension(p.ideal({})) == 2);
  CHECK(dimension(p.ideal({p.x})) == 1);
  CHECK(dimension(p.ideal({p.x * p.y})) == 1);
  CHECK(dimension(p.ideal({p.x, p.y})) == 0);
  CHECK(dimension(p.ideal({p.x * p.x, p.y * p.y})) == 0);
  CHECK_THROWS_AS(dimension(p.ideal({Polynomial::constant(2, p.ring->order(), Rational(1))})), Error);
}

TEST_CASE("quotient rings fold the relations into every operation") {
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial x = Polynomial::variable(2, ord, 0);
  Polynomial y = Polynomial::variable(2, ord, 1);
  RingPtr R = std::make_shared<const RingDescriptor>(std::vector<std::string>{"x", "y"}, ord,
                                                     std::vector<Polynomial>{x * x + y * y});

  // x^2 = -y^2 in the quotient
  CHECK(ideal_equal(Ideal(R, {x * x}), Ideal(R, {y * y})));
  CHECK(is_member(y * y, Ideal(R, {x * x})));
  CHECK(!is_member(x * y, Ideal(R, {x * x})));
  CHECK(Ideal(R, {x * x + y * y}).is_zero());
  CHECK(!Ideal(R, {x}).is_zero());

  // the colon respects the quotient structure: y^2*x is a multiple of x^2 here
  CHECK(ideal_equal(ideal_colon(Ideal(R, {x * x}), Ideal(R, {x})), Ideal(R, {x})));

  // preimages of (x) and (y) are (x, y^2) and (y, x^2); they meet in the
  // full square of the maximal ideal, strictly more than (x*y)
  Ideal meet = ideal_intersect(Ideal(R, {x}), Ideal(R, {y}));
  CHECK(ideal_equal(meet, Ideal(R, {x * y, y * y})));
  CHECK(!ideal_equal(meet, Ideal(R, {x * y})));

  // radical of (x^2) reaches y because y^2 = -x^2
  CHECK(radical_member(y, Ideal(R, {x * x})));
  CHECK(radical_equal(Ideal(R, {x * x}), Ideal(R, {x})));
  CHECK(dimension(Ideal(R, {x})) == 0);

  // mixing rings is rejected
  Plane p;
  CHECK_THROWS_AS(ideal_equal(Ideal(R, {x}), p.ideal({p.x})), Error);
}

TEST_CASE("interreduction drops redundant generators") {
  Plane p;
  std::vector<Polynomial> slim =
      interreduce_generators({p.x, p.x + p.x * p.x, p.y, p.x.scaled(Rational(2))});
  CHECK(slim.size() == 2);
  Ideal a = p.ideal(slim);
  CHECK(ideal_equal(a, p.ideal({p.x, p.y})));
}
