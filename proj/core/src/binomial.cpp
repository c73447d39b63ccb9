#include "multicut/binomial.hpp"

#include <algorithm>

#include "multicut/errors.hpp"

namespace multicut {

namespace {

BigCount gcd(BigCount a, BigCount b) {
  while (b != 0) {
    BigCount t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

BigCount checked_add(BigCount a, BigCount b) {
  BigCount out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CapacityError("exact count overflows 128 bits");
  }
  return out;
}

BigCount checked_mul(BigCount a, BigCount b) {
  BigCount out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CapacityError("exact count overflows 128 bits");
  }
  return out;
}

BigCount binomial(std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || y > x) return 0;
  y = std::min(y, x - y);
  BigCount result = 1;
  for (std::int64_t step = 1; step <= y; ++step) {
    // result * (x - y + step) / step stays integral at every step; divide out
    // the common factor first so the multiplication overflows as late as
    // possible.
    BigCount numer = static_cast<BigCount>(x - y + step);
    BigCount denom = static_cast<BigCount>(step);
    BigCount g = gcd(result, denom);
    result /= g;
    denom /= g;
    numer /= denom;  // denom | numer once gcd(result, denom) is divided out
    result = checked_mul(result, numer);
  }
  return result;
}

std::string to_string(BigCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace multicut
