#pragma once

#include <cstddef>
#include <vector>

#include "multicut/monomial.hpp"

namespace multicut {

struct LcmFoldOptions {
  /// Worker threads for the subset stream. The result does not depend on it.
  unsigned workers = 1;
};

/// The i-fold lcm-ideal of a minimal ideal with r generators: the minimal
/// ideal generated by lcms of i distinct generators. Zero ideal for i > r.
///
/// Subsets are streamed in colexicographic order of generator indices with a
/// running minimal set; any partial subset whose lcm is already divisible by
/// a kept generator is cut off together with all of its completions, so
/// memory stays proportional to the output.
MonomialIdeal lcm_fold(const MonomialIdeal& ideal, std::size_t i, LcmFoldOptions options = {});

/// The descending chain I = I_1 ⊇ I_2 ⊇ ... ⊇ I_r.
class LcmFiltration {
 public:
  LcmFiltration(MonomialIdeal base, std::vector<MonomialIdeal> levels)
      : base_(std::move(base)), levels_(std::move(levels)) {}

  const MonomialIdeal& base() const { return base_; }
  std::size_t depth() const { return levels_.size(); }
  /// 1-based; level(1) is the base ideal.
  const MonomialIdeal& level(std::size_t i) const { return levels_.at(i - 1); }
  const std::vector<MonomialIdeal>& levels() const { return levels_; }

 private:
  MonomialIdeal base_;
  std::vector<MonomialIdeal> levels_;
};

LcmFiltration filtration(const MonomialIdeal& ideal, LcmFoldOptions options = {});

}  // namespace multicut
