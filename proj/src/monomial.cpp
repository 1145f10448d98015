#include "idealis/monomial.hpp"

namespace idealis {
namespace {

int lex_cmp(const Monomial& u, const Monomial& v, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
  }
  return 0;
}

// Graded reverse lexicographic on the variable range [lo, hi): higher total
// degree wins; on ties the monomial with the smaller exponent at the last
// differing position is the greater one.
int grevlex_cmp(const Monomial& u, const Monomial& v, int lo, int hi) {
  long long du = 0, dv = 0;
  for (int i = lo; i < hi; ++i) {
    du += u[i];
    dv += v[i];
  }
  if (du != dv) return du > dv ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.nvars() != v.nvars()) throw Error("monomial arity mismatch");
  int n = u.nvars();
  switch (kind_) {
    case OrderKind::Lex:
      return lex_cmp(u, v, 0, n);
    case OrderKind::GrevLex:
      return grevlex_cmp(u, v, 0, n);
    case OrderKind::BlockElim: {
      int k = std::min(block_, n);
      int c = grevlex_cmp(u, v, 0, k);
      return c != 0 ? c : grevlex_cmp(u, v, k, n);
    }
  }
  throw Error("unreachable order kind");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::BlockElim:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace idealis
