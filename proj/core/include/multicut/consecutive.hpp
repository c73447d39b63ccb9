#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "multicut/binomial.hpp"
#include "multicut/monomial.hpp"

namespace multicut {

/// Failure ideal of the consecutive k-out-of-n:F system; generator t covers
/// components t..t+k-1, for t = 1..n-k+1.
MonomialIdeal cons_ideal(int k, int n);

/// A set of generator indices of the consecutive failure ideal.
struct GeneratorSubset {
  int k;
  int n;
  std::vector<int> elements;  // strictly increasing, within 1..n-k+1

  friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;
};

struct Block {
  int start;
  int size;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Maximal runs of consecutive elements and the gaps (missing indices)
/// between neighbouring runs.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<int> gaps;  // gaps[t] sits between blocks[t] and blocks[t + 1]

  /// 0 for a gap-free subset.
  int smallest_gap() const;
};

BlockDecomposition decompose(const GeneratorSubset& subset);

/// Visits, in lexicographic order, every i-subset of {1..n-k+1} whose gaps
/// all have size >= k. Built block by block: after an element the next one is
/// either adjacent or at least k + 1 further on.
void for_each_admissible(int k, int n, int i,
                         const std::function<void(const GeneratorSubset&)>& visit);

std::vector<GeneratorSubset> admissible_subsets(int k, int n, int i);

/// Support of the lcm of the generators indexed by `subset`.
Support multicut_support(const GeneratorSubset& subset);

/// Degree of that lcm from the block sizes: Σ (size + k - 1).
int degree_of(const GeneratorSubset& subset);

/// Minimal i-multicuts of the consecutive system: one generator per
/// admissible subset, no minimalization pass.
MonomialIdeal cons_multicut_ideal(int k, int n, int i);

/// Closed-form count of admissible i-subsets.
BigCount count_generators(int k, int n, int i);

}  // namespace multicut
