#pragma once

#include <span>
#include <vector>

#include "eulersum/laurent.hpp"
#include "eulersum/special_fn.hpp"

namespace eulersum {

/// One partial-fraction term coeff / (z - pole)^multiplicity.
struct PoleTerm {
  double pole = 0.0;
  int multiplicity = 1;
  double coeff = 0.0;

  friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

/*!
  Rational function r(z) = sum_i c_i / (z - beta_i)^{m_i} in partial-fraction form.

  Instances are always O(z^{-2}) at infinity (no polynomial part, and the
  simple-pole coefficients sum to zero) and have no pole within the integer
  guard of any integer. Poles are real.
*/
class RationalFunction {
 public:
  /// Validates and normalizes (merges duplicate (pole, multiplicity) entries).
  static RationalFunction from_poles(std::vector<PoleTerm> terms, double guard = default_guard);

  /// 1/((z + a)(z + b)) for a != b.
  static RationalFunction linear_pair(double a, double b, double guard = default_guard);

  [[nodiscard]] std::span<const PoleTerm> terms() const { return terms_; }
  /// Distinct poles in ascending order.
  [[nodiscard]] std::vector<double> poles() const;
  [[nodiscard]] int multiplicity_at(double pole) const;

  [[nodiscard]] double operator()(double x) const { return derivative_at(0, x); }
  /// k-th derivative at x, from the closed form of each partial fraction.
  [[nodiscard]] double derivative_at(int k, double x) const;

  /// Laurent expansion at `center` through order K. At a pole of r the
  /// principal part comes from the matching terms exactly.
  [[nodiscard]] FormalLaurentSeries local_series(double center, int K) const;

  /// r^{(k)} as a rational function.
  [[nodiscard]] RationalFunction derivative(int k) const;
  /// z -> r(-z).
  [[nodiscard]] RationalFunction reflected() const;
  [[nodiscard]] RationalFunction scaled(double factor) const;

  /// Smallest distance from a pole to the nearest integer.
  [[nodiscard]] double integer_clearance() const;

  friend RationalFunction operator+(const RationalFunction& lhs, const RationalFunction& rhs);

 private:
  explicit RationalFunction(std::vector<PoleTerm> terms) : terms_(std::move(terms)) {}
  static std::vector<PoleTerm> normalize(std::vector<PoleTerm> terms);

  std::vector<PoleTerm> terms_;
};

inline double derivative_at(const RationalFunction& r, int k, double x) {
  return r.derivative_at(k, x);
}

}  // namespace eulersum
