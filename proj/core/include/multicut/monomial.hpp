#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace multicut {

/// Bit t-1 of a support word marks variable x_t (component t) as present.
using Support = std::uint64_t;

/// A squarefree monomial x_{i_1}...x_{i_r} over n variables, i.e. the set of
/// failed components of a system state. Indices are 1-based at the API.
class SquarefreeMonomial {
 public:
  static constexpr int kMaxVariables = 63;

  /// Throws ParameterError if n is outside 1..63 or support has bits >= n.
  SquarefreeMonomial(int n, Support support);

  static SquarefreeMonomial one(int n) { return {n, 0}; }
  static SquarefreeMonomial from_indices(int n, std::span<const int> indices);
  static SquarefreeMonomial from_indices(int n, std::initializer_list<int> indices) {
    return from_indices(n, std::span<const int>(indices.begin(), indices.size()));
  }

  int n() const { return n_; }
  Support support() const { return support_; }
  int degree() const;
  bool contains(int index) const;
  std::vector<int> indices() const;

  friend bool operator==(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;
  friend auto operator<=>(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;

 private:
  int n_;
  Support support_;
};

std::ostream& operator<<(std::ostream& os, const SquarefreeMonomial& m);

SquarefreeMonomial lcm(const SquarefreeMonomial& a, const SquarefreeMonomial& b);
bool divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

/// A squarefree monomial ideal given by a finite generating set. Generators
/// are kept deduplicated and in canonical order (ascending support word).
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1 (empty support).
class MonomialIdeal {
 public:
  /// The zero ideal over n variables.
  explicit MonomialIdeal(int n);

  /// Arbitrary generating set; `minimal()` reports whether it happens to be
  /// the minimal one.
  MonomialIdeal(int n, std::span<const SquarefreeMonomial> generators);
  MonomialIdeal(int n, std::initializer_list<SquarefreeMonomial> generators)
      : MonomialIdeal(n, std::span<const SquarefreeMonomial>(generators.begin(), generators.size())) {}

  /// Builds from raw support words. When `assume_minimal` is set the caller
  /// guarantees minimality and no check is run; supports are still sorted
  /// and deduplicated.
  static MonomialIdeal from_supports(int n, std::vector<Support> supports,
                                     bool assume_minimal = false);

  static MonomialIdeal unit(int n) { return from_supports(n, {0}, true); }

  int n() const { return n_; }
  std::size_t size() const { return supports_.size(); }
  bool minimal() const { return minimal_; }
  bool is_zero() const { return supports_.empty(); }
  bool is_unit() const { return supports_.size() == 1 && supports_.front() == 0; }

  std::span<const Support> supports() const { return supports_; }
  SquarefreeMonomial generator(std::size_t index) const { return {n_, supports_.at(index)}; }
  std::vector<SquarefreeMonomial> generators() const;

  /// True iff some generator divides m.
  bool contains(const SquarefreeMonomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(int n, std::vector<Support> supports, bool minimal)
      : n_(n), supports_(std::move(supports)), minimal_(minimal) {}

  int n_;
  std::vector<Support> supports_;
  bool minimal_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

/// Minimal generating set of the ideal generated by `generators`.
MonomialIdeal minimalize(int n, std::span<const SquarefreeMonomial> generators);

/// Word-level minimalization used by the enumeration code. Returns the
/// minimal supports in canonical order.
std::vector<Support> minimal_supports(std::vector<Support> supports);

/// (I : m), generated by g / gcd(g, m) for every generator g of I.
MonomialIdeal colon(const MonomialIdeal& ideal, const SquarefreeMonomial& m);

bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// Throws ParameterError unless 1 <= n <= 63.
void check_variable_count(int n);

}  // namespace multicut
