#include "multicut/kofn.hpp"

#include <bit>
#include <string>
#include <vector>

#include "multicut/errors.hpp"

namespace multicut {

namespace {

void check_threshold(int k, int n) {
  check_variable_count(n);
  if (k < 1 || k > n) {
    throw ParameterError("threshold must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                         ", n = " + std::to_string(n) + ")");
  }
}

// Every support word over n bits with exactly k bits set, ascending.
std::vector<Support> k_subsets(int k, int n) {
  BigCount count = binomial(n, k);
  if (count > kMaxKofnGenerators) {
    throw CapacityError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") generators exceed the materialization limit");
  }
  std::vector<Support> out;
  out.reserve(static_cast<std::size_t>(count));
  const Support last = ((Support{1} << k) - 1) << (n - k);
  Support word = (Support{1} << k) - 1;
  while (true) {
    out.push_back(word);
    if (word == last) break;
    // Next word with the same popcount (Gosper).
    Support low = word & (~word + 1);
    Support ripple = word + low;
    word = ripple | (((word ^ ripple) >> 2) / low);
  }
  return out;
}

// e_0..e_n of p_1..p_n.
std::vector<double> elementary_symmetric(const ProbabilityVector& p) {
  std::vector<double> e(p.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    for (std::size_t d = t + 1; d >= 1; --d) e[d] += e[d - 1] * p[t];
  }
  return e;
}

Bound truncated_sum(int j, int n, int t, const std::vector<double>& degree_sums) {
  if (t < 0 || t > n - j) {
    throw ParameterError("truncation depth must be in 0.." + std::to_string(n - j));
  }
  CompensatedSum sum;
  for (int a = 0; a <= t; ++a) {
    double weight = static_cast<double>(binomial(a + j - 1, j - 1));
    double term = weight * degree_sums[static_cast<std::size_t>(a + j)];
    sum.add(a % 2 == 0 ? term : -term);
  }
  return {sum.value(), t % 2 == 0 ? BoundDirection::kUpper : BoundDirection::kLower, t == n - j};
}

}  // namespace

MonomialIdeal kofn_ideal(int k, int n) {
  check_threshold(k, n);
  return MonomialIdeal::from_supports(n, k_subsets(k, n), true);
}

StaircaseLevel staircase_level(int k, int n, BigCount l) {
  check_threshold(k, n);
  BigCount top = binomial(n, k);
  if (l < 1 || l > top) {
    throw ParameterError("number of simultaneous failures must be in 1..C(n, k) = " +
                         to_string(top));
  }
  int j = k;
  while (binomial(j, k) < l) ++j;
  return {k, l, j};
}

MonomialIdeal kofn_multicut_ideal(int k, int n, BigCount l) {
  return kofn_ideal(staircase_level(k, n, l).j, n);
}

BigCount BettiTable::rank(int a, int d) const {
  auto it = entries_.find({a, d});
  return it == entries_.end() ? 0 : it->second;
}

BettiTable betti_table(int j, int n) {
  check_threshold(j, n);
  std::map<std::pair<int, int>, BigCount> entries;
  for (int a = 0; a <= n - j; ++a) {
    entries.emplace(std::pair{a, a + j},
                    checked_mul(binomial(n, j + a), binomial(a + j - 1, j - 1)));
  }
  return BettiTable(j, n, std::move(entries));
}

UnivariatePolynomial unreliability_poly_iid(int j, int n) {
  BettiTable betti = betti_table(j, n);
  std::vector<Coefficient> coefficients(static_cast<std::size_t>(n) + 1);
  for (const auto& [index, rank] : betti.entries()) {
    auto [a, degree] = index;
    Coefficient c(rank);
    coefficients[static_cast<std::size_t>(degree)] = a % 2 == 0 ? c : Coefficient(-c);
  }
  return UnivariatePolynomial(std::move(coefficients));
}

ReliabilityPolynomial unreliability_poly_multigraded(int j, int n) {
  check_threshold(j, n);
  if (n > 24) throw CapacityError("multigraded polynomial is limited to n <= 24");
  ReliabilityPolynomial poly(n);
  for (int a = 0; a <= n - j; ++a) {
    Coefficient c(binomial(a + j - 1, j - 1));
    if (a % 2 == 1) c = -c;
    for (Support s : k_subsets(j + a, n)) poly.add_term(s, c);
  }
  return poly;
}

Bound kofn_bounds(int j, int n, double p, int t) {
  check_threshold(j, n);
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("failure probability outside [0, 1]");
  // Σ over C(n, d) monomials of degree d at iid p is C(n, d) p^d.
  std::vector<double> degree_sums(static_cast<std::size_t>(n) + 1);
  double power = 1.0;
  for (int d = 0; d <= n; ++d) {
    degree_sums[static_cast<std::size_t>(d)] = static_cast<double>(binomial(n, d)) * power;
    power *= p;
  }
  return truncated_sum(j, n, t, degree_sums);
}

Bound kofn_bounds(int j, int n, const ProbabilityVector& p, int t) {
  check_threshold(j, n);
  if (p.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("probability vector length does not match n");
  }
  return truncated_sum(j, n, t, elementary_symmetric(p));
}

}  // namespace multicut
