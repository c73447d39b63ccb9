#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "multicut/monomial.hpp"
#include "multicut/polynomial.hpp"
#include "multicut/probability.hpp"

namespace multicut {

/// Numerator of the multigraded Hilbert series of a squarefree monomial
/// ideal, i.e. the inclusion-exclusion polynomial of its generators after
/// cancellation. Computed by the colon recursion
///   H(<m_1..m_r>) = H(<m_1..m_{r-1}>) + x^{m_r} (1 - H(<m_1..m_{r-1}> : m_r))
/// with generators taken in canonical order, every quotient minimalized and
/// repeated quotients memoized.
ReliabilityPolynomial hilbert_numerator(const MonomialIdeal& ideal);

/// Tail probabilities F(i) = prob{Y >= i} of the number Y of minimal cuts
/// present, for i = 0..r. F(i) = 0 beyond the last stored level.
class SurvivorSeries {
 public:
  /// Validates 1 = F(0) >= F(1) >= ... >= 0 within 1e-9.
  explicit SurvivorSeries(std::vector<double> values);

  std::size_t max_level() const { return values_.size() - 1; }
  double at(std::size_t i) const { return i < values_.size() ? values_[i] : 0.0; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

enum class SystemKind { kKofn, kConsecutive };

/// Names a structured system whose multicut ideals have closed forms.
struct SystemTag {
  SystemKind kind;
  int k;
  int n;
};

/// "kofn" or "cons"; anything else is an unknown tag (ParameterError).
SystemKind parse_system_kind(std::string_view name);

/// The i-fold lcm-ideal of `base`, taken from the closed forms when a tag is
/// given and from lcm_fold otherwise. The tag must describe `base`.
MonomialIdeal multicut_level(const MonomialIdeal& base, std::size_t i,
                             const std::optional<SystemTag>& tag = std::nullopt);

/// F(i) = H_{I_i}(p) for i = 1..min(r, max_level), F(0) = 1.
SurvivorSeries survivor(const MonomialIdeal& ideal, const ProbabilityVector& p,
                        const std::optional<SystemTag>& tag = std::nullopt,
                        std::optional<std::size_t> max_level = std::nullopt);

/// Largest number of inclusion-exclusion terms bonferroni will sum.
inline constexpr std::size_t kMaxBonferroniTerms = 100'000'000;

/// Inclusion-exclusion for the union of the generator events truncated after
/// subsets of size `depth`: odd depth is an upper bound, even depth a lower
/// bound, depth = r exact.
Bound bonferroni(const MonomialIdeal& ideal, const ProbabilityVector& p, std::size_t depth);

/// prob{Y = i} = F(i) - F(i + 1) for i = 0..max_level. Only a series that
/// reaches the last level r sums to one.
std::vector<double> distribution(const SurvivorSeries& survivor);

}  // namespace multicut
