#pragma once

#include <stdexcept>
#include <string>

namespace multicut {

// Operands built over different variable counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-range system parameters (k, n, i, depth, probabilities, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a hard size guard (n > 63, too many subsets,
// integer overflow in exact counts).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace multicut
