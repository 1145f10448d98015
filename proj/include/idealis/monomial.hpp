#pragma once

#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "idealis/numeric.hpp"

namespace idealis {

// Power product in a fixed number of variables.  Exponents are machine ints;
// multiplication checks for overflow so "exact" stays exact.
class Monomial {
 public:
  explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0), degree_(0) {
    if (nvars < 0) throw Error("negative variable count");
  }
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    long long d = 0;
    for (int e : exps_) {
      if (e < 0) throw Error("negative exponent in monomial");
      d += e;
    }
    if (d > std::numeric_limits<int>::max()) throw Error("monomial degree overflow");
    degree_ = static_cast<int>(d);
  }

  static Monomial one(int nvars) { return Monomial(nvars); }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const {
    check_arity(o);
    std::vector<int> e(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
      long long s = static_cast<long long>(exps_[i]) + o.exps_[i];
      if (s > std::numeric_limits<int>::max()) throw Error("exponent overflow");
      e[i] = static_cast<int>(s);
    }
    return Monomial(std::move(e));
  }

  // this | m
  bool divides(const Monomial& m) const {
    check_arity(m);
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  // this / by, requires by | this
  Monomial divide(const Monomial& by) const {
    check_arity(by);
    std::vector<int> e(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
      if (by.exps_[i] > exps_[i]) throw Error("inexact monomial division");
      e[i] = exps_[i] - by.exps_[i];
    }
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    std::vector<int> e(a.exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  bool coprime(const Monomial& o) const {
    check_arity(o);
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
  }

  // Embedding helpers for auxiliary-variable constructions.
  Monomial prepend_vars(int k) const {
    std::vector<int> e(static_cast<size_t>(k), 0);
    e.insert(e.end(), exps_.begin(), exps_.end());
    return Monomial(std::move(e));
  }
  Monomial drop_front_vars(int k) const {
    for (int i = 0; i < k; ++i)
      if (exps_[static_cast<size_t>(i)] != 0) throw Error("dropping nonzero exponent");
    return Monomial(std::vector<int>(exps_.begin() + k, exps_.end()));
  }
  Monomial append_var() const {
    std::vector<int> e = exps_;
    e.push_back(0);
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

 private:
  void check_arity(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw Error("monomial arity mismatch");
  }
  std::vector<int> exps_;
  int degree_ = 0;
};

enum class OrderKind { Lex, GrevLex, BlockElim };

// Term order.  BlockElim(k) compares the first k variables (grevlex) before
// the rest (grevlex), so it eliminates the first k variables.
class MonomialOrder {
 public:
  MonomialOrder() = default;  // grevlex
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }
  static MonomialOrder block_elim(int k) {
    if (k <= 0) throw Error("block order needs a positive block");
    return MonomialOrder(OrderKind::BlockElim, k);
  }

  OrderKind kind() const { return kind_; }
  int block() const { return block_; }

  // -1 if u < v, 0 if equal, +1 if u > v.
  int compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(OrderKind k, int b) : kind_(k), block_(b) {}
  OrderKind kind_ = OrderKind::GrevLex;
  int block_ = 0;
};

}  // namespace idealis
