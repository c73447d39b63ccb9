#include "multicut/polynomial.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "multicut/errors.hpp"

namespace multicut {

namespace {

constexpr double kProbabilitySlack = 1e-9;

double term_product(Support support, const ProbabilityVector& p) {
  double product = 1.0;
  for (Support rest = support; rest != 0; rest &= rest - 1) {
    product *= p[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return product;
}

}  // namespace

ReliabilityPolynomial::ReliabilityPolynomial(int n) : n_(n) { check_variable_count(n); }

ReliabilityPolynomial ReliabilityPolynomial::constant(int n, const Coefficient& c) {
  ReliabilityPolynomial poly(n);
  poly.add_term(0, c);
  return poly;
}

ReliabilityPolynomial ReliabilityPolynomial::monomial(const SquarefreeMonomial& m,
                                                      const Coefficient& c) {
  ReliabilityPolynomial poly(m.n());
  poly.add_term(m.support(), c);
  return poly;
}

Coefficient ReliabilityPolynomial::coefficient(Support support) const {
  auto it = terms_.find(support);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void ReliabilityPolynomial::add_term(Support support, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(support, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ReliabilityPolynomial& ReliabilityPolynomial::operator+=(const ReliabilityPolynomial& other) {
  if (other.n_ != n_) throw DimensionError("polynomial sum over different variable counts");
  for (const auto& [support, c] : other.terms_) add_term(support, c);
  return *this;
}

ReliabilityPolynomial& ReliabilityPolynomial::operator-=(const ReliabilityPolynomial& other) {
  if (other.n_ != n_) throw DimensionError("polynomial difference over different variable counts");
  for (const auto& [support, c] : other.terms_) add_term(support, -c);
  return *this;
}

ReliabilityPolynomial ReliabilityPolynomial::times_coprime(Support m) const {
  ReliabilityPolynomial out(n_);
  for (const auto& [support, c] : terms_) {
    if ((support & m) != 0) {
      throw ParameterError("times_coprime: term shares a variable with the multiplier");
    }
    out.terms_.emplace_hint(out.terms_.end(), support | m, c);
  }
  return out;
}

double ReliabilityPolynomial::sum_at(const ProbabilityVector& p) const {
  if (p.size() != static_cast<std::size_t>(n_)) {
    throw DimensionError("probability vector has " + std::to_string(p.size()) +
                         " entries, polynomial has " + std::to_string(n_) + " variables");
  }
  CompensatedSum sum;
  for (const auto& [support, c] : terms_) {
    sum.add(c.convert_to<double>() * term_product(support, p));
  }
  return sum.value();
}

double evaluate(const ReliabilityPolynomial& poly, const ProbabilityVector& p) {
  double value = poly.sum_at(p);
  if (value < -kProbabilitySlack || value > 1.0 + kProbabilitySlack || std::isnan(value)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "polynomial evaluates to " << value << ", not a probability";
    throw ConsistencyError(msg.str());
  }
  return value;
}

std::ostream& operator<<(std::ostream& os, const ReliabilityPolynomial& poly) {
  if (poly.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [support, c] : poly.terms()) {
    Coefficient magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (support == 0) {
      os << magnitude;
    } else {
      if (magnitude != 1) os << magnitude << '*';
      os << SquarefreeMonomial(poly.n(), support);
    }
    first = false;
  }
  return os;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Coefficient> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Coefficient UnivariatePolynomial::coefficient(std::size_t degree) const {
  return degree < coefficients_.size() ? coefficients_[degree] : Coefficient(0);
}

// Compensated Horner scheme: the rounding error of every product and sum is
// recovered exactly (fma / TwoSum) and carried along in a second Horner pass.
double UnivariatePolynomial::operator()(double p) const {
  if (coefficients_.empty()) return 0.0;
  double r = coefficients_.back().convert_to<double>();
  double carry = 0.0;
  for (std::size_t d = coefficients_.size() - 1; d-- > 0;) {
    double product = r * p;
    double product_error = std::fma(r, p, -product);
    double a = coefficients_[d].convert_to<double>();
    double sum = product + a;
    double z = sum - product;
    double sum_error = (product - (sum - z)) + (a - z);
    r = sum;
    carry = carry * p + (product_error + sum_error);
  }
  return r + carry;
}

std::ostream& operator<<(std::ostream& os, const UnivariatePolynomial& poly) {
  bool first = true;
  for (std::size_t d = 0; d < poly.coefficients().size(); ++d) {
    const auto& c = poly.coefficients()[d];
    if (c == 0) continue;
    Coefficient magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (d == 0 || magnitude != 1) os << magnitude;
    if (d != 0 && magnitude != 1) os << '*';
    if (d == 1) os << 'p';
    if (d > 1) os << "p^" << d;
    first = false;
  }
  if (first) os << '0';
  return os;
}

}  // namespace multicut
