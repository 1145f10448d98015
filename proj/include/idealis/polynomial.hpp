#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealis/monomial.hpp"

namespace idealis {

struct Term {
  Rational coeff;
  Monomial mono;
  friend bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.mono == b.mono;
  }
};

// Multivariate polynomial over Q, kept canonical for a fixed term order:
// terms strictly descending, no zero coefficients.  Mixed-order arithmetic is
// a bug in the caller and is rejected.
class Polynomial {
 public:
  Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  static Polynomial from_terms(int nvars, MonomialOrder order, std::vector<Term> ts);
  static Polynomial constant(int nvars, MonomialOrder order, const Rational& c);
  static Polynomial variable(int nvars, MonomialOrder order, int index, int power = 1);
  static Polynomial term(MonomialOrder order, const Rational& c, Monomial m);

  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
  }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_[0];
  }
  const Monomial& leading_monomial() const { return leading().mono; }

  // Max total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial with_order(const MonomialOrder& o) const;
  Polynomial monic() const;  // divide by leading coefficient

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Rational& c, const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Auxiliary-variable embeddings (fresh variables in front / appended).
  Polynomial prepend_vars(int k, const MonomialOrder& new_order) const;
  Polynomial drop_front_vars(int k, const MonomialOrder& new_order) const;
  Polynomial append_var(const MonomialOrder& new_order) const;

 private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    if (!(order_ == o.order_)) throw Error("polynomial order mismatch");
  }
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Ambient ring: variable names, the active term order, and (for quotient
// rings R/Q) the list of defining relations.  Relations participate in every
// Groebner basis computed for ideals of this ring.
class RingDescriptor {
 public:
  RingDescriptor(std::vector<std::string> variables, MonomialOrder order,
                 std::vector<Polynomial> relations = {});

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  bool is_quotient() const { return !relations_.empty(); }

  std::optional<int> var_index(const std::string& name) const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.vars_ == b.vars_ && a.order_ == b.order_ && a.relations_ == b.relations_;
  }

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<Polynomial> relations_;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

void check_same_ring(const RingPtr& a, const RingPtr& b);

std::string to_string(const Monomial& m, const RingDescriptor& ring);
std::string to_string(const Polynomial& p, const RingDescriptor& ring);
std::string to_string(const RingDescriptor& ring);

}  // namespace idealis
