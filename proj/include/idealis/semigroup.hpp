#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealis/numeric.hpp"

namespace idealis {

// Numerical semigroup <g1,...,gk>: all non-negative integer combinations of
// the generators.  gcd of the generators must be 1, so the complement in N
// is finite and the Frobenius number (largest gap, -1 when there is none)
// exists.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<int> generators);

  const std::vector<int>& generators() const { return gens_; }
  int frobenius() const { return frobenius_; }
  int min_generator() const { return gens_.front(); }
  int max_generator() const { return gens_.back(); }

  bool contains(long n) const {
    if (n < 0) return false;
    if (n > frobenius_) return true;
    return table_[static_cast<size_t>(n)];
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<int> gens_;    // sorted, deduplicated
  int frobenius_ = -1;
  std::vector<bool> table_;  // membership on [0, frobenius]
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

// Term ideal of K[[S]] for a field K: fully described by its exponent set,
// an upward-closed subset of S, stored via the unique minimal generators.
//
// Every exponent >= B := max(min_exponents) + frobenius + 1 that lies in S
// belongs to the ideal: subtracting the largest generator exponent lands
// beyond the Frobenius number, hence in S.  So all decision procedures only
// ever need to look at the finite window [0, B].
class SemiTermIdeal {
 public:
  SemiTermIdeal(SemigroupPtr sg, std::vector<int> exponents);  // minimalizes

  const SemigroupPtr& semigroup() const { return sg_; }
  const std::vector<int>& min_exponents() const { return exps_; }

  bool is_zero() const { return exps_.empty(); }
  bool is_unit() const { return !exps_.empty() && exps_[0] == 0; }
  bool contains_exponent(long n) const;
  // window bound B above; 0 for the zero ideal
  long bound() const;

  friend bool operator==(const SemiTermIdeal& a, const SemiTermIdeal& b) {
    return *a.sg_ == *b.sg_ && a.exps_ == b.exps_;
  }

 private:
  SemigroupPtr sg_;
  std::vector<int> exps_;
};

// Term ideal of Z[S] (integer coefficients): at each exponent n the ideal
// holds exactly the multiples of a content c(n).  Stored as the content
// window [0, B) plus the eventual content that c(n) equals for all n >= B
// in S; the same bound argument as above makes the window sufficient.
class SemiTermIdealZ {
 public:
  // from generating terms (exponent, coefficient != 0)
  static SemiTermIdealZ from_generators(SemigroupPtr sg,
                                        const std::vector<std::pair<int, Integer>>& gens);
  // raw content function (0 entries = absent); normalized on construction
  SemiTermIdealZ(SemigroupPtr sg, std::vector<Integer> window, Integer eventual);

  const SemigroupPtr& semigroup() const { return sg_; }
  // content at exponent n; 0 means t^n has no element in the ideal
  Integer content(long n) const;
  long window_size() const { return static_cast<long>(window_.size()); }
  const Integer& eventual_content() const { return eventual_; }

  bool is_zero() const { return eventual_ == 0 && window_.empty(); }
  // minimal generating terms, recovered from the content function
  std::vector<std::pair<int, Integer>> generators() const;

  friend bool operator==(const SemiTermIdealZ& a, const SemiTermIdealZ& b) {
    return *a.sg_ == *b.sg_ && a.window_ == b.window_ && a.eventual_ == b.eventual_;
  }

 private:
  SemigroupPtr sg_;
  std::vector<Integer> window_;  // content at n for n < window_.size()
  Integer eventual_;             // content at n >= window_.size() (for n in S)
};

SemiTermIdeal sg_ideal_product(const SemiTermIdeal& a, const SemiTermIdeal& b);
SemiTermIdeal sg_ideal_power(const SemiTermIdeal& a, int n);
bool sg_ideal_equal(const SemiTermIdeal& a, const SemiTermIdeal& b);
bool sg_ideal_contains(const SemiTermIdeal& a, const SemiTermIdeal& b);  // b inside a
SemiTermIdeal sg_colon(const SemiTermIdeal& a, const SemiTermIdeal& b);

SemiTermIdealZ sg_ideal_product(const SemiTermIdealZ& a, const SemiTermIdealZ& b);
SemiTermIdealZ sg_ideal_power(const SemiTermIdealZ& a, int n);
bool sg_ideal_equal(const SemiTermIdealZ& a, const SemiTermIdealZ& b);
bool sg_ideal_contains(const SemiTermIdealZ& a, const SemiTermIdealZ& b);
SemiTermIdealZ sg_colon(const SemiTermIdealZ& a, const SemiTermIdealZ& b);

struct SgPowerScanReport {
  int checked_up_to = 0;
  std::vector<std::pair<int, bool>> per_n;
  std::optional<int> least_equal_n;
  bool persistence_verified = false;
};

template <class TermIdeal>
struct SgRRClosureResult {
  TermIdeal closure;
  int stabilized_at_m = 0;
  int window = 0;
  bool heuristic = true;
  std::vector<TermIdeal> chain;
};

SgPowerScanReport sg_power_scan(const SemiTermIdeal& a, const SemiTermIdeal& b, int n_max);
SgPowerScanReport sg_power_scan(const SemiTermIdealZ& a, const SemiTermIdealZ& b, int n_max);

SgRRClosureResult<SemiTermIdeal> sg_ratliff_rush(const SemiTermIdeal& a, int m_max, int window);
SgRRClosureResult<SemiTermIdealZ> sg_ratliff_rush(const SemiTermIdealZ& a, int m_max, int window);

std::string to_string(const SemiTermIdeal& a);
std::string to_string(const SemiTermIdealZ& a);

}  // namespace idealis
