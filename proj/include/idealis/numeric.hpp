#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace idealis {

// Every failure the library can report deliberately.  Callers that violate a
// documented precondition get one of these, never undefined behavior.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Integer = mpz_class;

// Exact rational scalar, always normalized: gcd(num, den) = 1 and den >= 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rational(denominator(), numerator());
  }

  // "p/q", or just "p" when q = 1.  mpq_class keeps this canonical.
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace idealis
