#include "multicut/monomial.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "multicut/errors.hpp"

namespace multicut {

namespace {

Support full_mask(int n) { return (Support{1} << n) - 1; }

void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": variable counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

void sort_unique(std::vector<Support>& supports) {
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
}

}  // namespace

void check_variable_count(int n) {
  if (n < 1 || n > SquarefreeMonomial::kMaxVariables) {
    throw ParameterError("variable count must be in 1..63, got " + std::to_string(n));
  }
}

SquarefreeMonomial::SquarefreeMonomial(int n, Support support) : n_(n), support_(support) {
  check_variable_count(n);
  if ((support & ~full_mask(n)) != 0) {
    throw ParameterError("support has variables beyond n = " + std::to_string(n));
  }
}

SquarefreeMonomial SquarefreeMonomial::from_indices(int n, std::span<const int> indices) {
  check_variable_count(n);
  Support support = 0;
  for (int index : indices) {
    if (index < 1 || index > n) {
      throw ParameterError("component index " + std::to_string(index) + " outside 1.." +
                           std::to_string(n));
    }
    support |= Support{1} << (index - 1);
  }
  return {n, support};
}

int SquarefreeMonomial::degree() const { return std::popcount(support_); }

bool SquarefreeMonomial::contains(int index) const {
  return index >= 1 && index <= n_ && ((support_ >> (index - 1)) & 1U) != 0;
}

std::vector<int> SquarefreeMonomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (Support rest = support_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SquarefreeMonomial& m) {
  if (m.support() == 0) return os << "1";
  bool first = true;
  for (int index : m.indices()) {
    if (!first) os << '*';
    os << 'x' << index;
    first = false;
  }
  return os;
}

SquarefreeMonomial lcm(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  require_same_n(a.n(), b.n(), "lcm");
  return {a.n(), a.support() | b.support()};
}

bool divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  require_same_n(a.n(), b.n(), "divides");
  return (a.support() & ~b.support()) == 0;
}

MonomialIdeal::MonomialIdeal(int n) : n_(n), minimal_(true) { check_variable_count(n); }

MonomialIdeal::MonomialIdeal(int n, std::span<const SquarefreeMonomial> generators)
    : n_(n), minimal_(false) {
  check_variable_count(n);
  supports_.reserve(generators.size());
  for (const auto& g : generators) {
    require_same_n(n, g.n(), "ideal generator");
    supports_.push_back(g.support());
  }
  sort_unique(supports_);
  minimal_ = minimal_supports(supports_).size() == supports_.size();
}

MonomialIdeal MonomialIdeal::from_supports(int n, std::vector<Support> supports,
                                           bool assume_minimal) {
  check_variable_count(n);
  for (Support s : supports) {
    if ((s & ~full_mask(n)) != 0) {
      throw ParameterError("support has variables beyond n = " + std::to_string(n));
    }
  }
  sort_unique(supports);
  bool minimal = assume_minimal || minimal_supports(supports).size() == supports.size();
  return MonomialIdeal(n, std::move(supports), minimal);
}

std::vector<SquarefreeMonomial> MonomialIdeal::generators() const {
  std::vector<SquarefreeMonomial> out;
  out.reserve(supports_.size());
  for (Support s : supports_) out.emplace_back(n_, s);
  return out;
}

bool MonomialIdeal::contains(const SquarefreeMonomial& m) const {
  require_same_n(n_, m.n(), "ideal membership");
  return std::any_of(supports_.begin(), supports_.end(),
                     [&](Support g) { return (g & ~m.support()) == 0; });
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  os << '<';
  for (std::size_t t = 0; t < ideal.size(); ++t) {
    if (t != 0) os << ", ";
    os << ideal.generator(t);
  }
  return os << '>';
}

std::vector<Support> minimal_supports(std::vector<Support> supports) {
  sort_unique(supports);
  // Process by increasing degree: a candidate can only be divided by a kept
  // support of strictly smaller degree.
  std::stable_sort(supports.begin(), supports.end(), [](Support a, Support b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<Support> kept;
  kept.reserve(supports.size());
  std::size_t lower_degree_end = 0;
  int current_degree = -1;
  for (Support candidate : supports) {
    int degree = std::popcount(candidate);
    if (degree != current_degree) {
      current_degree = degree;
      lower_degree_end = kept.size();
    }
    bool covered = false;
    for (std::size_t t = 0; t < lower_degree_end; ++t) {
      if ((kept[t] & ~candidate) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(candidate);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal minimalize(int n, std::span<const SquarefreeMonomial> generators) {
  check_variable_count(n);
  std::vector<Support> supports;
  supports.reserve(generators.size());
  for (const auto& g : generators) {
    require_same_n(n, g.n(), "minimalize");
    supports.push_back(g.support());
  }
  return MonomialIdeal::from_supports(n, minimal_supports(std::move(supports)), true);
}

MonomialIdeal colon(const MonomialIdeal& ideal, const SquarefreeMonomial& m) {
  require_same_n(ideal.n(), m.n(), "colon");
  std::vector<Support> quotients;
  quotients.reserve(ideal.size());
  for (Support g : ideal.supports()) quotients.push_back(g & ~m.support());
  return MonomialIdeal::from_supports(ideal.n(), minimal_supports(std::move(quotients)), true);
}

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a.n(), b.n(), "ideal_equals");
  auto left = a.minimal() ? std::vector<Support>(a.supports().begin(), a.supports().end())
                          : minimal_supports({a.supports().begin(), a.supports().end()});
  auto right = b.minimal() ? std::vector<Support>(b.supports().begin(), b.supports().end())
                           : minimal_supports({b.supports().begin(), b.supports().end()});
  return left == right;
}

}  // namespace multicut
