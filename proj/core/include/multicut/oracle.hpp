#pragma once

#include <cstddef>

#include "multicut/hilbert.hpp"
#include "multicut/monomial.hpp"
#include "multicut/probability.hpp"

namespace multicut {

/// Reference computations by exhaustion. They share no code path with the
/// closed forms or the Hilbert recursion and exist to check them.

inline constexpr int kMaxOracleVariables = 24;
inline constexpr std::size_t kMaxNaiveSubsets = 100'000'000;

struct StateSpaceResult {
  int n;
  std::size_t r;
  SurvivorSeries survivor;
  double total_weight;  // Σ of all state probabilities, 1 up to rounding
};

/// Walks all 2^n component states, weights each by its probability and
/// counts the generators it contains.
StateSpaceResult brute_force_survivor(const MonomialIdeal& ideal, const ProbabilityVector& p);

/// i-fold lcm-ideal by materializing the lcm of every i-subset of generators
/// and minimalizing afterwards, with no pruning.
MonomialIdeal naive_multicut_gens(const MonomialIdeal& ideal, std::size_t i);

}  // namespace multicut
