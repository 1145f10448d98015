#include "idealis/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace idealis {

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw Error("semigroup needs generators");
  for (int g : gens_)
    if (g <= 0) throw Error("semigroup generators must be positive");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  int d = 0;
  for (int g : gens_) d = std::gcd(d, g);
  if (d != 1) throw Error("semigroup generators must have gcd 1");

  // grow a membership table until min_generator consecutive members appear;
  // from there on every number is a member, so the largest gap seen is the
  // Frobenius number
  std::vector<bool> table{true};  // 0
  int run = 1, last_gap = -1;
  int min_g = gens_.front();
  while (run < min_g) {
    int n = static_cast<int>(table.size());
    bool in = false;
    for (int g : gens_) {
      if (g <= n && table[static_cast<size_t>(n - g)]) {
        in = true;
        break;
      }
    }
    table.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      last_gap = n;
    }
  }
  frobenius_ = last_gap;
  table_.assign(table.begin(), table.begin() + (frobenius_ + 1));
}

SemiTermIdeal::SemiTermIdeal(SemigroupPtr sg, std::vector<int> exponents) : sg_(std::move(sg)) {
  if (!sg_) throw Error("term ideal needs a semigroup");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  for (int e : exponents) {
    if (e < 0 || !sg_->contains(e))
      throw Error("exponent " + std::to_string(e) + " is not in the semigroup");
  }
  // keep only irreducible exponents: e is redundant when e - e' lands in the
  // semigroup for an already-kept e'
  for (int e : exponents) {
    bool redundant = false;
    for (int kept : exps_) {
      if (sg_->contains(e - kept)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) exps_.push_back(e);
  }
}

bool SemiTermIdeal::contains_exponent(long n) const {
  for (int e : exps_)
    if (sg_->contains(n - e)) return true;
  return false;
}

long SemiTermIdeal::bound() const {
  if (exps_.empty()) return 0;
  return exps_.back() + sg_->frobenius() + 1;
}

SemiTermIdeal sg_ideal_product(const SemiTermIdeal& a, const SemiTermIdeal& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  std::vector<int> sums;
  for (int e : a.min_exponents())
    for (int f : b.min_exponents()) sums.push_back(e + f);
  return SemiTermIdeal(a.semigroup(), std::move(sums));
}

SemiTermIdeal sg_ideal_power(const SemiTermIdeal& a, int n) {
  if (n < 1) throw Error("ideal power needs n >= 1");
  SemiTermIdeal p = a;
  for (int i = 1; i < n; ++i) p = sg_ideal_product(p, a);
  return p;
}

bool sg_ideal_equal(const SemiTermIdeal& a, const SemiTermIdeal& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  // windows cover both ideals; beyond them membership is "lies in S" for each
  long w = std::max(a.bound(), b.bound());
  for (long n = 0; n <= w; ++n)
    if (a.contains_exponent(n) != b.contains_exponent(n)) return false;
  return true;
}

bool sg_ideal_contains(const SemiTermIdeal& a, const SemiTermIdeal& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  return std::all_of(b.min_exponents().begin(), b.min_exponents().end(),
                     [&](int e) { return a.contains_exponent(e); });
}

SemiTermIdeal sg_colon(const SemiTermIdeal& a, const SemiTermIdeal& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  if (b.is_zero()) throw Error("colon by the zero ideal");
  const NumericalSemigroup& s = *a.semigroup();
  if (a.is_zero()) return a;

  // x = t^n satisfies x*B inside A iff n + q lies in A for every generator
  // exponent q of B (upward closure handles the rest of B).  Everything at
  // or beyond A's window bound qualifies, so candidates up to
  // bound + frobenius + max_generator cover all minimal generators.
  long limit = a.bound() + s.frobenius() + s.max_generator() + 1;
  std::vector<int> found;
  for (long n = 0; n <= limit; ++n) {
    if (!s.contains(n)) continue;
    bool ok = true;
    for (int q : b.min_exponents()) {
      if (!a.contains_exponent(n + q)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(static_cast<int>(n));
  }
  return SemiTermIdeal(a.semigroup(), std::move(found));
}

SemiTermIdealZ::SemiTermIdealZ(SemigroupPtr sg, std::vector<Integer> window, Integer eventual)
    : sg_(std::move(sg)), window_(std::move(window)), eventual_(std::move(eventual)) {
  if (!sg_) throw Error("term ideal needs a semigroup");
  if (eventual_ < 0) eventual_ = -eventual_;
  for (size_t n = 0; n < window_.size(); ++n) {
    if (window_[n] < 0) window_[n] = -window_[n];
    if (window_[n] != 0 && !sg_->contains(static_cast<long>(n)))
      throw Error("content outside the semigroup");
  }
  // canonical form: shrink the window while its tail repeats the eventual rule
  while (!window_.empty()) {
    long n = static_cast<long>(window_.size()) - 1;
    Integer implied = sg_->contains(n) ? eventual_ : Integer(0);
    if (window_.back() == implied)
      window_.pop_back();
    else
      break;
  }
}

SemiTermIdealZ SemiTermIdealZ::from_generators(SemigroupPtr sg,
                                               const std::vector<std::pair<int, Integer>>& gens) {
  if (!sg) throw Error("term ideal needs a semigroup");
  std::vector<std::pair<int, Integer>> gs;
  for (const auto& [e, c] : gens) {
    if (c == 0) throw Error("zero coefficient in term generator");
    if (e < 0 || !sg->contains(e)) throw Error("exponent " + std::to_string(e) + " is not in the semigroup");
    gs.emplace_back(e, c >= 0 ? c : Integer(-c));
  }
  if (gs.empty()) return SemiTermIdealZ(sg, {}, 0);

  int max_e = 0;
  Integer all = 0;
  for (const auto& [e, c] : gs) {
    max_e = std::max(max_e, e);
    all = gcd(all, c);
  }
  long w = max_e + sg->frobenius() + 1;
  std::vector<Integer> window(static_cast<size_t>(w), Integer(0));
  for (long n = 0; n < w; ++n) {
    Integer g = 0;
    for (const auto& [e, c] : gs)
      if (sg->contains(n - e)) g = gcd(g, c);
    window[static_cast<size_t>(n)] = g;
  }
  return SemiTermIdealZ(std::move(sg), std::move(window), all);
}

Integer SemiTermIdealZ::content(long n) const {
  if (n < 0) return 0;
  if (n < static_cast<long>(window_.size())) return window_[static_cast<size_t>(n)];
  return sg_->contains(n) ? eventual_ : Integer(0);
}

std::vector<std::pair<int, Integer>> SemiTermIdealZ::generators() const {
  std::vector<std::pair<int, Integer>> gens;
  if (is_zero()) return gens;
  const NumericalSemigroup& s = *sg_;
  long limit = static_cast<long>(window_.size()) + 2 * (s.frobenius() + 1) + 1;
  for (long n = 0; n <= limit; ++n) {
    Integer c = content(n);
    if (c == 0) continue;
    Integer have = 0;
    for (const auto& [e, ce] : gens)
      if (s.contains(n - e)) have = gcd(have, ce);
    if (have != c) gens.emplace_back(static_cast<int>(n), c);
  }
  // the derived terms must regenerate the ideal exactly
  if (!(from_generators(sg_, gens) == *this)) throw Error("internal: generator recovery failed");
  return gens;
}

SemiTermIdealZ sg_ideal_product(const SemiTermIdealZ& a, const SemiTermIdealZ& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  if (a.is_zero() || b.is_zero()) return SemiTermIdealZ(a.semigroup(), {}, 0);
  const NumericalSemigroup& s = *a.semigroup();
  long fa = std::max(a.window_size(), static_cast<long>(s.frobenius()) + 1);
  long fb = std::max(b.window_size(), static_cast<long>(s.frobenius()) + 1);
  long w = fa + fb;  // beyond this a full-content split exists on both sides
  std::vector<Integer> window(static_cast<size_t>(w), Integer(0));
  for (long n = 0; n < w; ++n) {
    Integer g = 0;
    for (long p = 0; p <= n; ++p) {
      Integer ca = a.content(p), cb = b.content(n - p);
      if (ca != 0 && cb != 0) g = gcd(g, ca * cb);
    }
    window[static_cast<size_t>(n)] = g;
  }
  return SemiTermIdealZ(a.semigroup(), std::move(window),
                        a.eventual_content() * b.eventual_content());
}

SemiTermIdealZ sg_ideal_power(const SemiTermIdealZ& a, int n) {
  if (n < 1) throw Error("ideal power needs n >= 1");
  SemiTermIdealZ p = a;
  for (int i = 1; i < n; ++i) p = sg_ideal_product(p, a);
  return p;
}

bool sg_ideal_equal(const SemiTermIdealZ& a, const SemiTermIdealZ& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  long w = std::max(a.window_size(), b.window_size());
  for (long n = 0; n < w; ++n)
    if (a.content(n) != b.content(n)) return false;
  return a.eventual_content() == b.eventual_content();
}

bool sg_ideal_contains(const SemiTermIdealZ& a, const SemiTermIdealZ& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  long w = std::max(a.window_size(), b.window_size());
  for (long n = 0; n < w; ++n) {
    Integer cb = b.content(n);
    if (cb == 0) continue;
    Integer ca = a.content(n);
    if (ca == 0 || cb % ca != 0) return false;
  }
  if (b.eventual_content() != 0) {
    if (a.eventual_content() == 0 || b.eventual_content() % a.eventual_content() != 0) return false;
  }
  return true;
}

SemiTermIdealZ sg_colon(const SemiTermIdealZ& a, const SemiTermIdealZ& b) {
  if (!(*a.semigroup() == *b.semigroup())) throw Error("semigroup mismatch");
  if (b.is_zero()) throw Error("colon by the zero ideal");
  if (a.is_zero()) return a;
  const NumericalSemigroup& s = *a.semigroup();
  std::vector<std::pair<int, Integer>> bg = b.generators();

  // c*t^n * (ce*t^e) must land in A for every generator of B: each n + e has
  // to be in A and c must clear A(n+e)/gcd(A(n+e), ce)
  long w = std::max(a.window_size(), static_cast<long>(s.frobenius()) + 1) + 1;
  std::vector<Integer> window(static_cast<size_t>(w), Integer(0));
  for (long n = 0; n < w; ++n) {
    if (!s.contains(n)) continue;
    Integer need = 1;
    bool ok = true;
    for (const auto& [e, ce] : bg) {
      Integer ca = a.content(n + e);
      if (ca == 0) {
        ok = false;
        break;
      }
      need = lcm(need, ca / gcd(ca, ce));
    }
    if (ok) window[static_cast<size_t>(n)] = need;
  }
  Integer ae = a.eventual_content(), be = b.eventual_content();
  Integer eventual = ae / gcd(ae, be);
  return SemiTermIdealZ(a.semigroup(), std::move(window), eventual);
}

namespace {

template <class TermIdeal>
SgPowerScanReport scan_impl(const TermIdeal& a, const TermIdeal& b, int n_max) {
  if (n_max < 1) throw Error("power scan needs n_max >= 1");
  if (!sg_ideal_contains(b, a)) throw Error("power scan requires the first ideal inside the second");
  if (sg_ideal_equal(a, b)) throw Error("power scan requires distinct ideals");

  SgPowerScanReport rep;
  TermIdeal an = a, bn = b;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      an = sg_ideal_product(an, a);
      bn = sg_ideal_product(bn, b);
    }
    bool eq = sg_ideal_equal(an, bn);
    rep.per_n.emplace_back(n, eq);
    if (eq && !rep.least_equal_n) rep.least_equal_n = n;
    if (rep.least_equal_n && !eq) throw Error("persistence violated in power scan");
  }
  rep.checked_up_to = n_max;
  rep.persistence_verified = true;
  return rep;
}

template <class TermIdeal>
SgRRClosureResult<TermIdeal> rr_impl(const TermIdeal& a, int m_max, int window) {
  if (m_max < 1 || window < 1) throw Error("closure needs positive bounds");
  if (a.is_zero()) throw Error("closure of the zero ideal");

  std::vector<TermIdeal> chain;
  TermIdeal am = a;
  TermIdeal am1 = sg_ideal_product(a, a);
  int run = 0;
  for (int m = 1; m <= m_max; ++m) {
    chain.push_back(sg_colon(am1, am));
    if (chain.size() >= 2) {
      const TermIdeal& prev = chain[chain.size() - 2];
      const TermIdeal& cur = chain.back();
      if (!sg_ideal_contains(cur, prev)) throw Error("closure chain is not ascending");
      run = sg_ideal_equal(prev, cur) ? run + 1 : 0;
      if (run >= window) {
        return {chain[chain.size() - 1 - static_cast<size_t>(window)], m - window, window, true,
                chain};
      }
    }
    am = am1;
    am1 = sg_ideal_product(am, a);
  }
  throw Error("closure chain did not stabilize within bound");
}

}  // namespace

SgPowerScanReport sg_power_scan(const SemiTermIdeal& a, const SemiTermIdeal& b, int n_max) {
  return scan_impl(a, b, n_max);
}
SgPowerScanReport sg_power_scan(const SemiTermIdealZ& a, const SemiTermIdealZ& b, int n_max) {
  return scan_impl(a, b, n_max);
}
SgRRClosureResult<SemiTermIdeal> sg_ratliff_rush(const SemiTermIdeal& a, int m_max, int window) {
  if (a.is_unit()) throw Error("closure of the unit ideal");
  return rr_impl(a, m_max, window);
}
SgRRClosureResult<SemiTermIdealZ> sg_ratliff_rush(const SemiTermIdealZ& a, int m_max, int window) {
  if (a.content(0) == 1) throw Error("closure of the unit ideal");
  return rr_impl(a, m_max, window);
}

std::string to_string(const SemiTermIdeal& a) {
  if (a.is_zero()) return "ideal()";
  std::ostringstream out;
  out << "ideal(";
  for (size_t i = 0; i < a.min_exponents().size(); ++i) {
    if (i) out << ", ";
    out << "t^" << a.min_exponents()[i];
  }
  out << ")";
  return out.str();
}

std::string to_string(const SemiTermIdealZ& a) {
  if (a.is_zero()) return "ideal()";
  std::ostringstream out;
  out << "ideal(";
  auto gens = a.generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ", ";
    out << gens[i].second.get_str() << "*t^" << gens[i].first;
  }
  out << ")";
  return out.str();
}

}  // namespace idealis
