#pragma once

#include <cstdint>
#include <string>

namespace multicut {

/// Exact nonnegative count wide enough for every binomial the tables need.
using BigCount = unsigned __int128;

/// C(x, y) with the convention C(x, y) = 0 when x < 0, y < 0 or y > x.
/// Throws CapacityError if the value does not fit in 128 bits.
BigCount binomial(std::int64_t x, std::int64_t y);

/// Checked arithmetic on BigCount; throws CapacityError on wraparound.
BigCount checked_add(BigCount a, BigCount b);
BigCount checked_mul(BigCount a, BigCount b);

std::string to_string(BigCount value);

}  // namespace multicut
