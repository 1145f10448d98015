#include "idealis/ideal.hpp"

#include <algorithm>

namespace idealis {

namespace {

// Variables used by internal constructions; '#' is not a legal identifier
// character in the script grammar, so these can never clash with user names.
const char* kAuxVar = "#t";

std::vector<Polynomial> with_relations(const Ideal& a) {
  std::vector<Polynomial> gens = a.generators();
  for (const Polynomial& r : a.ring()->relations()) gens.push_back(r);
  return gens;
}

// Intersection of two explicit generator lists over the plain polynomial
// ring of `ring` (relations are NOT added here; callers decide).  Classic
// construction: eliminate t from t*A + (1-t)*B.
std::vector<Polynomial> intersect_raw(const RingPtr& ring, const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& b) {
  MonomialOrder elim = MonomialOrder::block_elim(1);
  std::vector<std::string> vars = ring->variables();
  vars.insert(vars.begin(), kAuxVar);
  auto ext = std::make_shared<const RingDescriptor>(vars, elim);

  int n = ring->nvars();
  Polynomial t = Polynomial::variable(n + 1, elim, 0);
  Polynomial one_minus_t = Polynomial::constant(n + 1, elim, Rational(1)) - t;

  std::vector<Polynomial> gens;
  for (const Polynomial& f : a) gens.push_back(t * f.prepend_vars(1, elim));
  for (const Polynomial& f : b) gens.push_back(one_minus_t * f.prepend_vars(1, elim));

  GroebnerBasis gb = buchberger(ext, std::move(gens));
  std::vector<Polynomial> result;
  for (const Polynomial& g : gb.basis) {
    if (g.leading_monomial()[0] == 0)  // t-free leading term implies t-free polynomial
      result.push_back(g.drop_front_vars(1, ring->order()));
  }
  return result;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  if (!ring_) throw Error("ideal needs a ring");
  for (Polynomial& g : gens) {
    if (g.nvars() != ring_->nvars()) throw Error("generator arity mismatch");
    Polynomial h = g.with_order(ring_->order());
    if (!h.is_zero()) gens_.push_back(std::move(h));
  }
}

const GroebnerBasis& Ideal::groebner() const {
  if (!gb_) gb_ = std::make_shared<const GroebnerBasis>(buchberger(ring_, with_relations(*this)));
  return *gb_;
}

bool Ideal::is_zero() const {
  if (gens_.empty()) return true;
  if (!ring_->is_quotient()) return false;
  GroebnerBasis rel = buchberger(ring_, ring_->relations());
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Polynomial& g) { return idealis::is_member(g, rel); });
}

std::vector<Polynomial> interreduce_generators(std::vector<Polynomial> gens) {
  // drop duplicates first, then anything the remaining generators reproduce
  std::vector<Polynomial> unique;
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(std::move(m));
  }
  std::vector<Polynomial> kept = unique;
  for (size_t i = kept.size(); i-- > 0;) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    if (normal_form(kept[i], others).is_zero()) kept.erase(kept.begin() + static_cast<long>(i));
  }
  return kept;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), interreduce_generators(std::move(gens)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators())
    for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), interreduce_generators(std::move(gens)));
}

Ideal ideal_power(const Ideal& a, int n) {
  if (n < 1) throw Error("ideal power needs n >= 1");
  Ideal p = a;
  for (int i = 1; i < n; ++i) p = ideal_product(p, a);
  return p;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  return a.groebner().basis == b.groebner().basis;
}

bool ideal_contains(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  const GroebnerBasis& gb = a.groebner();
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Polynomial& g) { return is_member(g, gb); });
}

bool is_member(const Polynomial& f, const Ideal& a) { return is_member(f, a.groebner()); }

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  // in a quotient R/Q the intersection of (A+Q) and (B+Q) is the preimage
  return Ideal(a.ring(), intersect_raw(a.ring(), with_relations(a), with_relations(b)));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw Error("colon by the zero ideal");
  std::vector<Polynomial> lifted = with_relations(a);
  std::optional<Ideal> result;
  for (const Polynomial& f : b.generators()) {
    if (f.is_zero()) continue;
    // (A : f) = (A intersect (f)) / f, computed in the ambient polynomial
    // ring; A already carries the relations, (f) must not
    std::vector<Polynomial> meet = intersect_raw(a.ring(), lifted, {f});
    std::vector<Polynomial> quot;
    for (const Polynomial& g : meet) quot.push_back(divide_exact(g, f));
    Ideal piece(a.ring(), interreduce_generators(std::move(quot)));
    result = result ? ideal_intersect(*result, piece) : piece;
  }
  if (!result) throw Error("colon by the zero ideal");
  return *result;
}

bool radical_member(const Polynomial& f, const Ideal& a) {
  // 1 - y*f trick in one extra variable; relations ride along as generators
  const RingPtr& ring = a.ring();
  int n = ring->nvars();
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<std::string> vars = ring->variables();
  vars.push_back(kAuxVar);
  auto ext = std::make_shared<const RingDescriptor>(vars, ord);

  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) gens.push_back(g.append_var(ord));
  for (const Polynomial& r : ring->relations()) gens.push_back(r.append_var(ord));
  Polynomial y = Polynomial::variable(n + 1, ord, n);
  gens.push_back(Polynomial::constant(n + 1, ord, Rational(1)) - y * f.append_var(ord));

  return buchberger(ext, std::move(gens)).is_unit();
}

bool radical_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  for (const Polynomial& g : a.generators())
    if (!radical_member(g, b)) return false;
  for (const Polynomial& g : b.generators())
    if (!radical_member(g, a)) return false;
  return true;
}

int dimension(const Ideal& a) {
  const GroebnerBasis& gb = a.groebner();
  if (gb.is_unit()) throw Error("dimension of the unit ideal (empty variety)");
  int n = a.ring()->nvars();

  std::vector<std::vector<int>> supports;
  for (const Polynomial& g : gb.basis) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (g.leading_monomial()[i] > 0) s.push_back(i);
    supports.push_back(std::move(s));
  }

  // dim R/a = size of the largest variable subset containing no leading-term support
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const std::vector<int>& s : supports) {
      bool inside = std::all_of(s.begin(), s.end(), [&](int v) { return mask >> v & 1u; });
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace idealis
