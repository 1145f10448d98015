#pragma once

#include <span>
#include <vector>

#include "idealis/polynomial.hpp"

namespace idealis {

// Reduced Groebner basis: monic, fully interreduced, sorted ascending by
// leading monomial.  Unique for a given (ideal, order), so comparing two of
// these decides ideal equality.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> basis;

  bool is_zero() const { return basis.empty(); }
  bool is_unit() const { return basis.size() == 1 && basis[0].is_one(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return *a.ring == *b.ring && a.basis == b.basis;
  }
};

// Full multivariate division.  Deterministic: reducers are tried in list
// order and the leading term is always reduced first.  No term of the result
// is divisible by any leading monomial of gs.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> gs);

// Same division but also returns cofactors with f = sum(cofactor[i]*gs[i]) + remainder.
struct TrackedDivision {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;
};
TrackedDivision normal_form_tracked(const Polynomial& f, std::span<const Polynomial> gs);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger with normal pair selection (minimal lcm degree, then pair
// index), the coprime-lcm criterion and the chain criterion, followed by
// full interreduction.  Generators are taken as-is; quotient-ring relations
// must already be included by the caller.
GroebnerBasis buchberger(RingPtr ring, std::vector<Polynomial> gens);

bool is_member(const Polynomial& f, const GroebnerBasis& gb);

// Division by a single polynomial with a zero-remainder requirement.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace idealis
