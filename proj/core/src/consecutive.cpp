#include "multicut/consecutive.hpp"

#include <string>

#include "multicut/errors.hpp"

namespace multicut {

namespace {

void check_system(int k, int n) {
  check_variable_count(n);
  if (k < 1 || k > n) {
    throw ParameterError("consecutive system needs 1 <= k <= n (k = " + std::to_string(k) +
                         ", n = " + std::to_string(n) + ")");
  }
}

void check_fold(int k, int n, int i) {
  check_system(k, n);
  if (i < 1 || i > n - k + 1) {
    throw ParameterError("number of simultaneous failures must be in 1.." +
                         std::to_string(n - k + 1));
  }
}

Support window(int k, int start) { return ((Support{1} << k) - 1) << (start - 1); }

class AdmissibleWalker {
 public:
  AdmissibleWalker(int k, int n, int i, const std::function<void(const GeneratorSubset&)>& visit)
      : k_(k), last_(n - k + 1), fold_(i), visit_(visit), subset_{k, n, {}} {
    subset_.elements.reserve(static_cast<std::size_t>(i));
  }

  void run() {
    for (int first = 1; first + fold_ - 1 <= last_; ++first) extend_from(first);
  }

 private:
  void extend_from(int element) {
    subset_.elements.push_back(element);
    int placed = static_cast<int>(subset_.elements.size());
    if (placed == fold_) {
      visit_(subset_);
    } else {
      int remaining = fold_ - placed;
      // Adjacent element (same block), then every gap of size >= k.
      if (element + remaining <= last_) extend_from(element + 1);
      for (int next = element + k_ + 1; next + remaining - 1 <= last_; ++next) extend_from(next);
    }
    subset_.elements.pop_back();
  }

  int k_;
  int last_;
  int fold_;
  const std::function<void(const GeneratorSubset&)>& visit_;
  GeneratorSubset subset_;
};

}  // namespace

MonomialIdeal cons_ideal(int k, int n) {
  check_system(k, n);
  std::vector<Support> supports;
  supports.reserve(static_cast<std::size_t>(n - k + 1));
  for (int start = 1; start <= n - k + 1; ++start) supports.push_back(window(k, start));
  return MonomialIdeal::from_supports(n, std::move(supports), true);
}

int BlockDecomposition::smallest_gap() const {
  int smallest = 0;
  for (int gap : gaps) {
    if (smallest == 0 || gap < smallest) smallest = gap;
  }
  return smallest;
}

BlockDecomposition decompose(const GeneratorSubset& subset) {
  BlockDecomposition out;
  for (int element : subset.elements) {
    if (!out.blocks.empty()) {
      Block& current = out.blocks.back();
      int end = current.start + current.size;
      if (element == end) {
        ++current.size;
        continue;
      }
      out.gaps.push_back(element - end);
    }
    out.blocks.push_back({element, 1});
  }
  return out;
}

void for_each_admissible(int k, int n, int i,
                         const std::function<void(const GeneratorSubset&)>& visit) {
  check_fold(k, n, i);
  AdmissibleWalker(k, n, i, visit).run();
}

std::vector<GeneratorSubset> admissible_subsets(int k, int n, int i) {
  std::vector<GeneratorSubset> out;
  for_each_admissible(k, n, i, [&](const GeneratorSubset& s) { out.push_back(s); });
  return out;
}

Support multicut_support(const GeneratorSubset& subset) {
  Support support = 0;
  for (int element : subset.elements) support |= window(subset.k, element);
  return support;
}

int degree_of(const GeneratorSubset& subset) {
  int degree = 0;
  for (const Block& block : decompose(subset).blocks) degree += block.size + subset.k - 1;
  return degree;
}

MonomialIdeal cons_multicut_ideal(int k, int n, int i) {
  std::vector<Support> supports;
  for_each_admissible(k, n, i,
                      [&](const GeneratorSubset& s) { supports.push_back(multicut_support(s)); });
  return MonomialIdeal::from_supports(n, std::move(supports), true);
}

BigCount count_generators(int k, int n, int i) {
  check_fold(k, n, i);
  // m runs over the total gap length; the weight counts start positions and
  // the inner sum counts placements of a gaps, each of size >= k.
  BigCount total = static_cast<BigCount>(n - k - i + 2);
  for (int m = 1; m <= n - k - i + 1; ++m) {
    BigCount inner = 0;
    for (int a = 1; a <= i - 1; ++a) {
      inner = checked_add(inner, checked_mul(binomial(i - 1, i - 1 - a),
                                             binomial(m - (k - 1) * a - 1, a - 1)));
    }
    total = checked_add(total, checked_mul(static_cast<BigCount>(n - k - i + 2 - m), inner));
  }
  return total;
}

}  // namespace multicut
