#include "multicut/oracle.hpp"

#include <string>
#include <vector>

#include "multicut/binomial.hpp"
#include "multicut/errors.hpp"

namespace multicut {

StateSpaceResult brute_force_survivor(const MonomialIdeal& ideal, const ProbabilityVector& p) {
  const int n = ideal.n();
  if (n > kMaxOracleVariables) {
    throw CapacityError("state-space enumeration is limited to n <= " +
                        std::to_string(kMaxOracleVariables));
  }
  if (p.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("probability vector length does not match the variable count");
  }
  auto generators = ideal.supports();
  const std::size_t r = generators.size();
  std::vector<CompensatedSum> mass(r + 1);
  CompensatedSum total;

  const Support states = Support{1} << n;
  for (Support state = 0; state < states; ++state) {
    double weight = 1.0;
    for (int t = 0; t < n; ++t) {
      double pt = p[static_cast<std::size_t>(t)];
      weight *= ((state >> t) & 1U) != 0 ? pt : 1.0 - pt;
    }
    std::size_t present = 0;
    for (Support g : generators) present += (g & ~state) == 0 ? 1 : 0;
    mass[present].add(weight);
    total.add(weight);
  }

  std::vector<double> tail(r + 1);
  CompensatedSum running;
  for (std::size_t i = r + 1; i-- > 1;) {
    running.add(mass[i].value());
    tail[i] = running.value();
  }
  tail[0] = 1.0;
  return {n, r, SurvivorSeries(std::move(tail)), total.value()};
}

MonomialIdeal naive_multicut_gens(const MonomialIdeal& ideal, std::size_t i) {
  if (i == 0) throw ParameterError("fold index must be at least 1");
  const std::size_t r = ideal.size();
  if (i > r) return MonomialIdeal(ideal.n());
  BigCount subsets = binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(i));
  if (subsets > kMaxNaiveSubsets) {
    throw CapacityError("C(" + std::to_string(r) + ", " + std::to_string(i) +
                        ") subsets exceed the naive enumeration limit");
  }
  auto generators = ideal.supports();
  std::vector<Support> lcms;
  lcms.reserve(static_cast<std::size_t>(subsets));

  // Lexicographic walk over index combinations.
  std::vector<std::size_t> chosen(i);
  for (std::size_t t = 0; t < i; ++t) chosen[t] = t;
  while (true) {
    Support lcm = 0;
    for (std::size_t index : chosen) lcm |= generators[index];
    lcms.push_back(lcm);
    std::size_t pos = i;
    while (pos > 0 && chosen[pos - 1] == r - i + pos - 1) --pos;
    if (pos == 0) break;
    ++chosen[pos - 1];
    for (std::size_t t = pos; t < i; ++t) chosen[t] = chosen[t - 1] + 1;
  }
  return MonomialIdeal::from_supports(ideal.n(), minimal_supports(std::move(lcms)), true);
}

}  // namespace multicut
