#pragma once

#include <map>
#include <utility>

#include "multicut/binomial.hpp"
#include "multicut/monomial.hpp"
#include "multicut/polynomial.hpp"
#include "multicut/probability.hpp"

namespace multicut {

/// Largest generator count kofn_ideal will materialize.
inline constexpr BigCount kMaxKofnGenerators = 10'000'000;

/// Failure ideal of the k-out-of-n:F system: all k-subsets of {1..n}.
MonomialIdeal kofn_ideal(int k, int n);

/// For l simultaneous failures of a k-out-of-n:F system, the effective
/// threshold j with C(j-1, k) < l <= C(j, k). The l-fold lcm-ideal of the
/// system equals the failure ideal of the j-out-of-n:F system.
struct StaircaseLevel {
  int k;
  BigCount l;
  int j;
};

StaircaseLevel staircase_level(int k, int n, BigCount l);

/// Minimal l-multicuts of the k-out-of-n:F system, read off the staircase
/// instead of enumerating l-subsets of cuts.
MonomialIdeal kofn_multicut_ideal(int k, int n, BigCount l);

/// Graded Betti numbers of the j-out-of-n failure ideal. The resolution is
/// linear, so the only nonzero ranks sit at (a, a + j) for 0 <= a <= n - j.
class BettiTable {
 public:
  BettiTable(int j, int n, std::map<std::pair<int, int>, BigCount> entries)
      : j_(j), n_(n), entries_(std::move(entries)) {}

  int j() const { return j_; }
  int n() const { return n_; }
  /// Rank at (homological index a, total degree d); zero if absent.
  BigCount rank(int a, int d) const;
  const std::map<std::pair<int, int>, BigCount>& entries() const { return entries_; }

 private:
  int j_;
  int n_;
  std::map<std::pair<int, int>, BigCount> entries_;
};

BettiTable betti_table(int j, int n);

/// prob{at least j of n i.i.d. components failed} as a polynomial in p,
/// written as the alternating Betti sum Σ_a (-1)^a β_{a,a+j} p^{a+j}.
UnivariatePolynomial unreliability_poly_iid(int j, int n);

/// The same event for independent, non-identical components: every
/// squarefree monomial of degree j + a carries (-1)^a C(a+j-1, j-1).
/// Materializes Σ_a C(n, j+a) terms; guarded to n <= 24.
ReliabilityPolynomial unreliability_poly_multigraded(int j, int n);

/// Truncation of the Betti sum after the summands a = 0..t. Even t gives an
/// upper bound, odd t a lower bound, t = n - j the exact value.
Bound kofn_bounds(int j, int n, double p, int t);
Bound kofn_bounds(int j, int n, const ProbabilityVector& p, int t);

}  // namespace multicut
