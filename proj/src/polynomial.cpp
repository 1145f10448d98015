#include "idealis/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace idealis {

Polynomial Polynomial::from_terms(int nvars, MonomialOrder order, std::vector<Term> ts) {
  for (const Term& t : ts) {
    if (t.mono.nvars() != nvars) throw Error("term arity mismatch");
  }
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  Polynomial p(nvars, order);
  for (Term& t : ts) {
    if (t.coeff.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(int nvars, MonomialOrder order, const Rational& c) {
  return from_terms(nvars, order, {{c, Monomial::one(nvars)}});
}

Polynomial Polynomial::variable(int nvars, MonomialOrder order, int index, int power) {
  if (index < 0 || index >= nvars) throw Error("variable index out of range");
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(index)] = power;
  return from_terms(nvars, order, {{Rational(1), Monomial(std::move(e))}});
}

Polynomial Polynomial::term(MonomialOrder order, const Rational& c, Monomial m) {
  int n = m.nvars();
  return from_terms(n, order, {{c, std::move(m)}});
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::with_order(const MonomialOrder& o) const {
  return from_terms(nvars_, o, terms_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inverse());
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(nvars_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({s, terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) prods.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return from_terms(nvars_, order_, std::move(prods));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_, order_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  Polynomial r(nvars_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplying every monomial by a fixed one preserves the sort order
  for (const Term& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::prepend_vars(int k, const MonomialOrder& new_order) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) ts.push_back({t.coeff, t.mono.prepend_vars(k)});
  return from_terms(nvars_ + k, new_order, std::move(ts));
}

Polynomial Polynomial::drop_front_vars(int k, const MonomialOrder& new_order) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) ts.push_back({t.coeff, t.mono.drop_front_vars(k)});
  return from_terms(nvars_ - k, new_order, std::move(ts));
}

Polynomial Polynomial::append_var(const MonomialOrder& new_order) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) ts.push_back({t.coeff, t.mono.append_var()});
  return from_terms(nvars_ + 1, new_order, std::move(ts));
}

RingDescriptor::RingDescriptor(std::vector<std::string> variables, MonomialOrder order,
                               std::vector<Polynomial> relations)
    : vars_(std::move(variables)), order_(order), relations_(std::move(relations)) {
  if (vars_.empty()) throw Error("ring needs at least one variable");
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw Error("duplicate variable name: " + vars_[i]);
  for (Polynomial& r : relations_) {
    if (r.nvars() != nvars()) throw Error("relation arity mismatch");
    if (r.is_zero()) throw Error("zero relation");
    r = r.with_order(order_);
  }
}

std::optional<int> RingDescriptor::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error("ring mismatch between operands");
}

std::string to_string(const Monomial& m, const RingDescriptor& ring) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    out << ring.variables()[static_cast<size_t>(i)];
    if (m[i] > 1) out << "^" << m[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

std::string to_string(const Polynomial& p, const RingDescriptor& ring) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (t.mono.is_one()) {
      out << c.str();
    } else {
      if (!c.is_one()) out << c.str() << "*";
      out << to_string(t.mono, ring);
    }
    first = false;
  }
  return out.str();
}

std::string to_string(const RingDescriptor& ring) {
  std::ostringstream out;
  out << "Q[";
  for (size_t i = 0; i < ring.variables().size(); ++i) {
    if (i) out << ",";
    out << ring.variables()[i];
  }
  out << "]";
  if (ring.is_quotient()) {
    out << "/(";
    for (size_t i = 0; i < ring.relations().size(); ++i) {
      if (i) out << ", ";
      out << to_string(ring.relations()[i], ring);
    }
    out << ")";
  }
  return out.str();
}

}  // namespace idealis
