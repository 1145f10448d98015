#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "idealis/ideal.hpp"

namespace idealis {

struct PowerScanReport {
  int checked_up_to = 0;
  std::vector<std::pair<int, bool>> per_n;  // (n, I^n == J^n)
  std::optional<int> least_equal_n;
  // once powers agree they must keep agreeing; the scan hard-checks this
  bool persistence_verified = false;
};

// pre: I contained in J, I != J
PowerScanReport power_scan(const Ideal& I, const Ideal& J, int n_max);

struct ReductionReport {
  bool is_reduction = false;
  std::optional<int> least_m;
  int checked_up_to = 0;
};

// least m <= m_max with I*J^m = J^(m+1); pre: I contained in J
ReductionReport is_reduction(const Ideal& I, const Ideal& J, int m_max);

struct RRClosureResult {
  Ideal closure;
  int stabilized_at_m = 0;
  int window = 0;
  bool heuristic = true;  // window stabilization is evidence, not proof
  std::vector<Ideal> chain;  // (I^(m+1) : I^m) for m = 1..stabilized_at_m+window
};

// thrown when the colon chain keeps moving past m_max
struct UnstabilizedError : Error {
  explicit UnstabilizedError(std::vector<Ideal> c)
      : Error("closure chain did not stabilize within bound"), chain(std::move(c)) {}
  std::vector<Ideal> chain;
};

// Union of (I^(m+1) : I^m), detected by `window` consecutive equal links.
// pre: I nonzero and proper.
RRClosureResult ratliff_rush(const Ideal& I, int m_max, int window);

struct ExpEqualVerdict {
  enum class Kind { Yes, NoUpToBound, Unknown } kind = Kind::Unknown;
  std::optional<int> n0;      // for Yes: powers agree from n0 on
  std::string certificate;    // for NoUpToBound: why
  int n_checked = 0;
};

ExpEqualVerdict is_exponentially_equal(const Ideal& I, const Ideal& J, int n_max, int m_max,
                                       int window = 2);

struct BigWitness {
  Ideal candidate;
  std::optional<int> collapse_n;  // set when found via the power route
  std::string route;              // "power-collapse" or "rr-containment"
};

struct BigScanReport {
  std::optional<BigWitness> witness;
  int candidates_tried = 0;
};

// Searches proper subideals I of J whose powers collapse onto J's (or whose
// closure swallows J); finding one shows J is not big.  Candidates: the
// user-supplied list, then generator subsets, generator rescalings and
// seeded random generator combinations, until `budget` candidates were tried.
BigScanReport big_witness_search(const Ideal& J, const std::vector<Ideal>& user_candidates,
                                 int budget, int n_max, uint64_t seed);

// Graded shrink: pick generators of I whose cosets modulo m*J are linearly
// independent; the returned subideal still satisfies I2^n0 = J^n0.
// pre: plain polynomial ring, I and J homogeneous, I contained in J, and the
// power scan finds a collapse within n_max (or I = J).
Ideal minimal_exp_equal_subideal(const Ideal& I, const Ideal& J, int n_max);

// Row-selection helper behind minimal_exp_equal_subideal, exposed for tests:
// indices of generators of I whose normal forms modulo gb span independent
// cosets, chosen greedily in generator order.
std::vector<int> independent_coset_indices(const std::vector<Polynomial>& gens,
                                           const GroebnerBasis& gb);

// Cheap certificates that I^n != J^n for every n: differing radicals or
// differing Krull dimensions.  pre: I properly contained in J.
std::vector<std::string> strictness_guarantees(const Ideal& I, const Ideal& J);

}  // namespace idealis
