#pragma once

#include <vector>

#include "idealis/groebner.hpp"

namespace idealis {

// Ideal of ring (or of ring R/Q when the ring carries relations), presented
// by a finite generator list.  The reduced Groebner basis, which always
// includes the ring relations, is computed lazily and cached.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& groebner() const;

  bool is_unit() const { return groebner().is_unit(); }
  bool is_proper() const { return !is_unit(); }
  // zero as an ideal of the quotient: every generator lies in the relation ideal
  bool is_zero() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const GroebnerBasis> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int n);  // n >= 1

bool ideal_equal(const Ideal& a, const Ideal& b);
// true iff b is contained in a
bool ideal_contains(const Ideal& a, const Ideal& b);
bool is_member(const Polynomial& f, const Ideal& a);

Ideal ideal_intersect(const Ideal& a, const Ideal& b);
// (a : b); b must not be the zero ideal
Ideal ideal_colon(const Ideal& a, const Ideal& b);

bool radical_member(const Polynomial& f, const Ideal& a);
bool radical_equal(const Ideal& a, const Ideal& b);

// Krull dimension of R/a (relations included); the unit ideal is rejected.
int dimension(const Ideal& a);

// Drop generators that reduce to zero modulo the remaining ones.
std::vector<Polynomial> interreduce_generators(std::vector<Polynomial> gens);

}  // namespace idealis
