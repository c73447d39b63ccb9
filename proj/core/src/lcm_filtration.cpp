#include "multicut/lcm_filtration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <span>
#include <string>
#include <thread>

#include "multicut/errors.hpp"

namespace multicut {

namespace {

void require_minimal(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.minimal()) {
    throw ParameterError(std::string(what) + " requires a minimally generated ideal");
  }
}

// Streams every i-subset of generators whose partial lcm is not yet covered.
// Finished lcms are buffered and minimalized in batches; the minimal set so
// far prunes every partial subset it already divides.
class SubsetFolder {
 public:
  SubsetFolder(std::span<const Support> generators, std::size_t fold)
      : generators_(generators), fold_(fold) {}

  // Top-level branch: `largest` is the largest generator index in the subset.
  void run_branch(std::size_t largest) {
    Support start = generators_[largest];
    if (fold_ == 1) {
      emit(start);
      return;
    }
    if (covered(start)) return;
    descend(fold_ - 1, largest, start);
  }

  std::vector<Support> take() {
    flush();
    return std::move(kept_);
  }

 private:
  static constexpr std::size_t kMinBatch = 64;

  void descend(std::size_t remaining, std::size_t upper, Support prefix) {
    for (std::size_t index = remaining - 1; index < upper; ++index) {
      Support next = prefix | generators_[index];
      if (remaining == 1) {
        emit(next);
      } else if (!covered(next)) {
        descend(remaining - 1, index, next);
      }
    }
  }

  // Only kept lcms of degree <= deg(candidate) can divide it.
  bool covered(Support candidate) const {
    auto end = by_degree_.begin() +
               static_cast<std::ptrdiff_t>(degree_end_[static_cast<std::size_t>(std::popcount(candidate))]);
    return std::any_of(by_degree_.begin(), end,
                       [candidate](Support g) { return (g & ~candidate) == 0; });
  }

  void emit(Support lcm) {
    pending_.push_back(lcm);
    if (pending_.size() >= std::max(kMinBatch, 2 * kept_.size())) flush();
  }

  // Merges the buffered lcms into the minimal set: the kept set is already
  // minimal, so only new-vs-kept divisibility is checked.
  void flush() {
    if (pending_.empty()) return;
    std::vector<Support> fresh = minimal_supports(std::move(pending_));
    pending_.clear();
    std::erase_if(fresh, [this](Support c) { return covered(c); });
    if (fresh.empty()) return;
    std::erase_if(kept_, [&fresh](Support g) {
      return std::any_of(fresh.begin(), fresh.end(), [g](Support c) { return (c & ~g) == 0; });
    });
    kept_.insert(kept_.end(), fresh.begin(), fresh.end());
    by_degree_ = kept_;
    std::stable_sort(by_degree_.begin(), by_degree_.end(),
                     [](Support a, Support b) { return std::popcount(a) < std::popcount(b); });
    degree_end_.fill(0);
    for (Support g : by_degree_) ++degree_end_[static_cast<std::size_t>(std::popcount(g))];
    for (std::size_t d = 1; d < degree_end_.size(); ++d) degree_end_[d] += degree_end_[d - 1];
  }

  std::span<const Support> generators_;
  std::size_t fold_;
  std::vector<Support> kept_;
  std::vector<Support> pending_;
  std::vector<Support> by_degree_;
  std::array<std::size_t, 65> degree_end_{};
};

}  // namespace

MonomialIdeal lcm_fold(const MonomialIdeal& ideal, std::size_t i, LcmFoldOptions options) {
  require_minimal(ideal, "lcm_fold");
  if (i == 0) throw ParameterError("lcm_fold: fold index must be at least 1");
  const std::size_t r = ideal.size();
  if (i > r) return MonomialIdeal(ideal.n());
  if (i == 1) return ideal;

  auto generators = ideal.supports();
  const std::size_t first = i - 1;
  const std::size_t branches = r - first;
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(options.workers, 1, branches));

  if (workers == 1) {
    SubsetFolder folder(generators, i);
    for (std::size_t largest = first; largest < r; ++largest) folder.run_branch(largest);
    return MonomialIdeal::from_supports(ideal.n(), minimal_supports(folder.take()), true);
  }

  std::vector<std::vector<Support>> partial(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        SubsetFolder folder(generators, i);
        for (std::size_t largest = first + w; largest < r; largest += workers) {
          folder.run_branch(largest);
        }
        partial[w] = folder.take();
      });
    }
  }
  std::vector<Support> merged;
  for (auto& part : partial) merged.insert(merged.end(), part.begin(), part.end());
  return MonomialIdeal::from_supports(ideal.n(), minimal_supports(std::move(merged)), true);
}

LcmFiltration filtration(const MonomialIdeal& ideal, LcmFoldOptions options) {
  require_minimal(ideal, "filtration");
  if (ideal.is_zero()) throw ParameterError("filtration of the zero ideal is empty");
  std::vector<MonomialIdeal> levels;
  levels.reserve(ideal.size());
  for (std::size_t i = 1; i <= ideal.size(); ++i) levels.push_back(lcm_fold(ideal, i, options));
  return LcmFiltration(ideal, std::move(levels));
}

}  // namespace multicut
