#include "idealis/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace idealis {

namespace {

// Index of the first reducer whose leading monomial divides m, or -1.
int find_reducer(const Monomial& m, std::span<const Polynomial> gs) {
  for (size_t i = 0; i < gs.size(); ++i) {
    if (!gs[i].is_zero() && gs[i].leading_monomial().divides(m)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> gs) {
  Polynomial p = f;
  Polynomial r(f.nvars(), f.order());
  while (!p.is_zero()) {
    int i = find_reducer(p.leading_monomial(), gs);
    if (i < 0) {
      // leading term is irreducible; park it in the remainder
      r = r + Polynomial::term(f.order(), p.leading().coeff, p.leading_monomial());
      p = p - Polynomial::term(f.order(), p.leading().coeff, p.leading_monomial());
    } else {
      const Polynomial& g = gs[static_cast<size_t>(i)];
      Rational c = p.leading().coeff / g.leading().coeff;
      Monomial m = p.leading_monomial().divide(g.leading_monomial());
      p = p - g.times_term(c, m);
    }
  }
  return r;
}

TrackedDivision normal_form_tracked(const Polynomial& f, std::span<const Polynomial> gs) {
  Polynomial p = f;
  Polynomial r(f.nvars(), f.order());
  std::vector<Polynomial> cof(gs.size(), Polynomial(f.nvars(), f.order()));
  while (!p.is_zero()) {
    int i = find_reducer(p.leading_monomial(), gs);
    if (i < 0) {
      Polynomial lt = Polynomial::term(f.order(), p.leading().coeff, p.leading_monomial());
      r = r + lt;
      p = p - lt;
    } else {
      const Polynomial& g = gs[static_cast<size_t>(i)];
      Rational c = p.leading().coeff / g.leading().coeff;
      Monomial m = p.leading_monomial().divide(g.leading_monomial());
      cof[static_cast<size_t>(i)] =
          cof[static_cast<size_t>(i)] + Polynomial::term(f.order(), c, m);
      p = p - g.times_term(c, m);
    }
  }
  return {r, cof};
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(f.leading().coeff.inverse(), l.divide(f.leading_monomial()));
  Polynomial b = g.times_term(g.leading().coeff.inverse(), l.divide(g.leading_monomial()));
  return a - b;
}

GroebnerBasis buchberger(RingPtr ring, std::vector<Polynomial> gens) {
  const MonomialOrder& ord = ring->order();
  std::vector<Polynomial> g;
  for (Polynomial& f : gens) {
    if (f.nvars() != ring->nvars()) throw Error("generator arity mismatch");
    Polynomial h = f.with_order(ord);
    if (!h.is_zero()) g.push_back(h.monic());
  }

  // pair = (lcm degree, i, j) with i < j; processed pairs feed the chain criterion
  using Pair = std::tuple<int, int, int>;
  auto mk = [&](int i, int j) {
    Monomial l = Monomial::lcm(g[static_cast<size_t>(i)].leading_monomial(),
                               g[static_cast<size_t>(j)].leading_monomial());
    return Pair{l.degree(), i, j};
  };
  std::set<Pair> queue;
  std::set<std::pair<int, int>> done;
  for (size_t j = 1; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) queue.insert(mk(static_cast<int>(i), static_cast<int>(j)));

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    (void)deg;
    queue.erase(queue.begin());
    done.insert({i, j});

    const Monomial& li = g[static_cast<size_t>(i)].leading_monomial();
    const Monomial& lj = g[static_cast<size_t>(j)].leading_monomial();
    if (li.coprime(lj)) continue;  // S-polynomial reduces to zero

    // chain criterion: some lm(g_k) divides lcm(lm_i, lm_j) and both
    // shoulder pairs were already handled
    Monomial l = Monomial::lcm(li, lj);
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!g[static_cast<size_t>(k)].leading_monomial().divides(l)) continue;
      auto ik = std::minmax(i, k);
      auto jk = std::minmax(j, k);
      if (done.count({ik.first, ik.second}) && done.count({jk.first, jk.second})) skip = true;
    }
    if (skip) continue;

    Polynomial r = normal_form(s_polynomial(g[static_cast<size_t>(i)], g[static_cast<size_t>(j)]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    int n = static_cast<int>(g.size()) - 1;
    for (int k = 0; k < n; ++k) queue.insert(mk(k, n));
  }

  // minimalize: keep only elements whose lm is not divisible by another's
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = g[j].leading_monomial();
      if (!lj.divides(g[i].leading_monomial())) continue;
      // on equal leading monomials keep the earlier element
      redundant = !(lj == g[i].leading_monomial()) || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // tail-reduce each element against the rest; one pass suffices since the
  // leading monomials are already pairwise irreducible
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });

  GroebnerBasis gb{std::move(ring), std::move(reduced)};
  if (!gb.basis.empty() && gb.basis[0].is_constant()) gb.basis = {gb.basis[0].monic()};
  return gb;
}

bool is_member(const Polynomial& f, const GroebnerBasis& gb) {
  Polynomial g = f.with_order(gb.ring->order());
  return normal_form(g, gb.basis).is_zero();
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by zero polynomial");
  Polynomial p = f.with_order(g.order());
  Polynomial q(g.nvars(), g.order());
  while (!p.is_zero()) {
    if (!g.leading_monomial().divides(p.leading_monomial()))
      throw Error("inexact polynomial division");
    Rational c = p.leading().coeff / g.leading().coeff;
    Monomial m = p.leading_monomial().divide(g.leading_monomial());
    q = q + Polynomial::term(g.order(), c, m);
    p = p - g.times_term(c, m);
  }
  return q;
}

}  // namespace idealis
