#include "multicut/probability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "multicut/errors.hpp"

namespace multicut {

ProbabilityVector::ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t t = 0; t < values_.size(); ++t) {
    double p = values_[t];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ParameterError("failure probability of component " + std::to_string(t + 1) +
                           " is outside [0, 1]");
    }
  }
}

ProbabilityVector ProbabilityVector::iid(int n, double p) {
  if (n < 0) throw ParameterError("negative component count");
  return ProbabilityVector(std::vector<double>(static_cast<std::size_t>(n), p));
}

bool ProbabilityVector::identical() const {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) ==
         values_.end();
}

void CompensatedSum::add(double x) {
  double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

std::string_view to_string(BoundDirection direction) {
  return direction == BoundDirection::kUpper ? "upper" : "lower";
}

}  // namespace multicut
