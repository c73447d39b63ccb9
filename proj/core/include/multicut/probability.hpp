#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace multicut {

/// Independent component failure probabilities p_1..p_n, each in [0, 1].
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> values);
  ProbabilityVector(std::initializer_list<double> values)
      : ProbabilityVector(std::vector<double>(values)) {}

  static ProbabilityVector iid(int n, double p);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t index) const { return values_[index]; }
  std::span<const double> values() const { return values_; }
  /// True when every component has the same probability.
  bool identical() const;

 private:
  std::vector<double> values_;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

enum class BoundDirection { kUpper, kLower };

std::string_view to_string(BoundDirection direction);

/// A truncated alternating sum. `exact` marks the full-length sum.
struct Bound {
  double value;
  BoundDirection direction;
  bool exact;
};

}  // namespace multicut
