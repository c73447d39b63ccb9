#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "multicut/monomial.hpp"
#include "multicut/probability.hpp"

namespace multicut {

/// Exact integer coefficient; small values stay inline, larger ones grow.
using Coefficient = boost::multiprecision::cpp_int;

/// Integer multilinear polynomial in x_1..x_n, stored as support -> nonzero
/// coefficient. The Hilbert-series numerators of squarefree ideals live here.
class ReliabilityPolynomial {
 public:
  using Terms = std::map<Support, Coefficient>;

  explicit ReliabilityPolynomial(int n);

  static ReliabilityPolynomial constant(int n, const Coefficient& c);
  static ReliabilityPolynomial monomial(const SquarefreeMonomial& m, const Coefficient& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Zero when the support has no term.
  Coefficient coefficient(Support support) const;

  void add_term(Support support, const Coefficient& c);

  ReliabilityPolynomial& operator+=(const ReliabilityPolynomial& other);
  ReliabilityPolynomial& operator-=(const ReliabilityPolynomial& other);
  friend ReliabilityPolynomial operator+(ReliabilityPolynomial a, const ReliabilityPolynomial& b) {
    return a += b;
  }
  friend ReliabilityPolynomial operator-(ReliabilityPolynomial a, const ReliabilityPolynomial& b) {
    return a -= b;
  }

  /// Product with the monomial x^m. Every term must be coprime to m so the
  /// result stays multilinear; throws ParameterError otherwise.
  ReliabilityPolynomial times_coprime(Support m) const;

  /// Σ coeff · Π p_i without any range check.
  double sum_at(const ProbabilityVector& p) const;

  friend bool operator==(const ReliabilityPolynomial&, const ReliabilityPolynomial&) = default;

 private:
  int n_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ReliabilityPolynomial& poly);

/// Probability of the event enumerated by a Hilbert numerator. The value is
/// a probability by construction; anything outside [0, 1] by more than 1e-9
/// raises ConsistencyError rather than being clamped.
double evaluate(const ReliabilityPolynomial& poly, const ProbabilityVector& p);

/// Integer polynomial in a single variable p; coefficient index = degree.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Coefficient> coefficients);

  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  const std::vector<Coefficient>& coefficients() const { return coefficients_; }
  Coefficient coefficient(std::size_t degree) const;

  double operator()(double p) const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  std::vector<Coefficient> coefficients_;  // trailing zeros trimmed
};

std::ostream& operator<<(std::ostream& os, const UnivariatePolynomial& poly);

}  // namespace multicut
