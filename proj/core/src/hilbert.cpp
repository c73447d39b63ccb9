#include "multicut/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "multicut/binomial.hpp"
#include "multicut/consecutive.hpp"
#include "multicut/errors.hpp"
#include "multicut/kofn.hpp"
#include "multicut/lcm_filtration.hpp"

namespace multicut {

namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  static DoubleDouble normalized(double hi, double lo) {
    double s = hi + lo;
    return {s, lo - (s - hi)};
  }
  DoubleDouble operator-() const { return {-hi, -lo}; }
  DoubleDouble& operator+=(const DoubleDouble& other) {
    double s = hi + other.hi;
    double z = s - hi;
    double e = (hi - (s - z)) + (other.hi - z);
    *this = normalized(s, e + lo + other.lo);
    return *this;
  }
  friend DoubleDouble operator*(const DoubleDouble& a, double b) {
    double product = a.hi * b;
    double e = std::fma(a.hi, b, -product);
    return normalized(product, e + a.lo * b);
  }
};

constexpr double kSlack = 1e-9;
// Largest n for which the k-out-of-n numerator is listed term by term.
constexpr int kExplicitKofnLimit = 16;

struct SupportsHash {
  std::size_t operator()(const std::vector<Support>& supports) const {
    std::size_t h = supports.size();
    for (Support s : supports) h ^= std::hash<Support>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class NumeratorBuilder {
 public:
  explicit NumeratorBuilder(int n) : n_(n) {}

  // `supports` is minimal and canonically ordered.
  ReliabilityPolynomial build(const std::vector<Support>& supports) {
    if (supports.empty()) return ReliabilityPolynomial(n_);
    if (supports.front() == 0) return ReliabilityPolynomial::constant(n_, 1);
    if (supports.size() == 1) {
      ReliabilityPolynomial single(n_);
      single.add_term(supports.front(), 1);
      return single;
    }

    // Variables shared by every generator factor out.
    Support common = supports.front();
    for (Support s : supports) common &= s;
    if (common != 0) {
      std::vector<Support> reduced;
      reduced.reserve(supports.size());
      for (Support s : supports) reduced.push_back(s & ~common);
      return build(minimal_supports(std::move(reduced))).times_coprime(common);
    }

    if (auto it = memo_.find(supports); it != memo_.end()) return it->second;

    ReliabilityPolynomial result(n_);
    std::vector<Support> quotient;
    for (std::size_t t = 0; t < supports.size(); ++t) {
      Support pivot = supports[t];
      quotient.clear();
      for (std::size_t s = 0; s < t; ++s) quotient.push_back(supports[s] & ~pivot);
      ReliabilityPolynomial term = ReliabilityPolynomial::constant(n_, 1);
      term -= build(minimal_supports(quotient));
      result += term.times_coprime(pivot);
    }
    memo_.emplace(supports, result);
    return result;
  }

 private:
  int n_;
  std::unordered_map<std::vector<Support>, ReliabilityPolynomial, SupportsHash> memo_;
};

void check_tag(const MonomialIdeal& base, const SystemTag& tag) {
  MonomialIdeal expected = tag.kind == SystemKind::kKofn ? kofn_ideal(tag.k, tag.n)
                                                         : cons_ideal(tag.k, tag.n);
  if (base.n() != tag.n || !ideal_equals(base, expected)) {
    throw ParameterError("system tag does not describe the given ideal");
  }
}

}  // namespace

ReliabilityPolynomial hilbert_numerator(const MonomialIdeal& ideal) {
  if (!ideal.minimal()) {
    throw ParameterError("hilbert_numerator requires a minimally generated ideal");
  }
  NumeratorBuilder builder(ideal.n());
  return builder.build({ideal.supports().begin(), ideal.supports().end()});
}

SurvivorSeries::SurvivorSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 1.0) {
    throw ConsistencyError("survivor series must start at F(0) = 1");
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] < -kSlack || values_[i] > values_[i - 1] + kSlack) {
      throw ConsistencyError("survivor series is not a nonincreasing probability at i = " +
                             std::to_string(i));
    }
  }
}

SystemKind parse_system_kind(std::string_view name) {
  if (name == "kofn") return SystemKind::kKofn;
  if (name == "cons") return SystemKind::kConsecutive;
  throw ParameterError("unknown system tag '" + std::string(name) + "'");
}

MonomialIdeal multicut_level(const MonomialIdeal& base, std::size_t i,
                             const std::optional<SystemTag>& tag) {
  if (i == 0) throw ParameterError("multicut level must be at least 1");
  if (!tag) return lcm_fold(base, i);
  check_tag(base, *tag);
  if (i > base.size()) return MonomialIdeal(base.n());
  if (tag->kind == SystemKind::kKofn) return kofn_multicut_ideal(tag->k, tag->n, i);
  return cons_multicut_ideal(tag->k, tag->n, static_cast<int>(i));
}

SurvivorSeries survivor(const MonomialIdeal& ideal, const ProbabilityVector& p,
                        const std::optional<SystemTag>& tag,
                        std::optional<std::size_t> max_level) {
  if (!ideal.minimal()) throw ParameterError("survivor requires a minimally generated ideal");
  if (p.size() != static_cast<std::size_t>(ideal.n())) {
    throw DimensionError("probability vector length does not match the variable count");
  }
  if (tag) check_tag(ideal, *tag);
  const std::size_t top = std::min(ideal.size(), max_level.value_or(ideal.size()));

  std::vector<double> values{1.0};
  values.reserve(top + 1);
  // Consecutive equal levels (the k-out-of-n staircase) share one value.
  std::optional<MonomialIdeal> previous;
  double previous_value = 0.0;
  for (std::size_t i = 1; i <= top; ++i) {
    double value;
    if (tag && tag->kind == SystemKind::kKofn) {
      int j = staircase_level(tag->k, tag->n, i).j;
      bool same = i > 1 && staircase_level(tag->k, tag->n, i - 1).j == j;
      if (same) {
        value = previous_value;
      } else if (tag->n <= kExplicitKofnLimit) {
        value = evaluate(unreliability_poly_multigraded(j, tag->n), p);
      } else {
        // Too many terms to list; sum the same polynomial by degree.
        value = kofn_bounds(j, tag->n, p, tag->n - j).value;
      }
    } else {
      MonomialIdeal level = multicut_level(ideal, i, tag);
      if (previous && *previous == level) {
        value = previous_value;
      } else {
        value = evaluate(hilbert_numerator(level), p);
        previous = std::move(level);
      }
    }
    previous_value = value;
    values.push_back(value);
  }
  return SurvivorSeries(std::move(values));
}

Bound bonferroni(const MonomialIdeal& ideal, const ProbabilityVector& p, std::size_t depth) {
  const std::size_t r = ideal.size();
  if (depth < 1 || depth > r) {
    throw ParameterError("Bonferroni depth must be in 1.." + std::to_string(r));
  }
  if (p.size() != static_cast<std::size_t>(ideal.n())) {
    throw DimensionError("probability vector length does not match the variable count");
  }
  BigCount terms = 0;
  for (std::size_t j = 1; j <= depth; ++j) {
    terms = checked_add(terms, binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(j)));
    if (terms > kMaxBonferroniTerms) {
      throw CapacityError("Bonferroni depth " + std::to_string(depth) + " needs more than " +
                          std::to_string(kMaxBonferroniTerms) + " terms");
    }
  }

  // Depth-first over index subsets of size <= depth, carrying the lcm and
  // its probability. Deep truncations cancel heavily, so every product and
  // sum is kept in double-double precision.
  auto generators = ideal.supports();
  std::vector<DoubleDouble> by_size(depth + 1);
  auto visit = [&](auto&& self, std::size_t from, std::size_t size, Support lcm,
                   DoubleDouble probability) -> void {
    for (std::size_t t = from; t < r; ++t) {
      Support next = lcm | generators[t];
      DoubleDouble next_probability = probability;
      for (Support bits = generators[t] & ~lcm; bits != 0; bits &= bits - 1) {
        next_probability = next_probability * p[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      by_size[size + 1] += next_probability;
      if (size + 1 < depth) self(self, t + 1, size + 1, next, next_probability);
    }
  };
  visit(visit, 0, 0, Support{0}, DoubleDouble{1.0, 0.0});

  DoubleDouble sum;
  for (std::size_t j = 1; j <= depth; ++j) sum += j % 2 == 1 ? by_size[j] : -by_size[j];
  CompensatedSum total;
  total.add(sum.hi);
  total.add(sum.lo);
  return {total.value(), depth % 2 == 1 ? BoundDirection::kUpper : BoundDirection::kLower,
          depth == r};
}

std::vector<double> distribution(const SurvivorSeries& survivor) {
  std::vector<double> masses;
  masses.reserve(survivor.max_level() + 1);
  for (std::size_t i = 0; i <= survivor.max_level(); ++i) {
    double mass = survivor.at(i) - survivor.at(i + 1);
    if (mass < -kSlack) {
      throw ConsistencyError("negative probability mass at Y = " + std::to_string(i));
    }
    masses.push_back(mass);
  }
  return masses;
}

}  // namespace multicut
