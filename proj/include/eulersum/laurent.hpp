#pragma once

#include <span>
#include <string>
#include <vector>

#include "eulersum/special_fn.hpp"

namespace eulersum {

/*!
  Truncated Laurent expansion sum_{k=min_order}^{valid_order} c_k (z - center)^k.

  `valid_order` is the highest order whose coefficient is trustworthy. Orders
  below `min_order` are exactly zero; orders above `valid_order` are unknown
  and reading them throws PrecisionError. Products tighten the valid order to
  min(K1 + m2, K2 + m1), which is what makes residue extraction safe.
*/
class FormalLaurentSeries {
 public:
  FormalLaurentSeries(double center, int min_order, std::vector<double> coeffs);

  /// Taylor series with coefficients for orders 0..coeffs.size()-1.
  static FormalLaurentSeries taylor(double center, std::vector<double> coeffs);

  [[nodiscard]] double center() const { return center_; }
  [[nodiscard]] int min_order() const { return min_order_; }
  [[nodiscard]] int valid_order() const {
    return min_order_ + static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] std::span<const double> coefficients() const { return coeffs_; }

  [[nodiscard]] double coefficient(int order) const;
  [[nodiscard]] double residue() const { return coefficient(-1); }

  /// Sum of the stored terms at z; meaningful only close to the center.
  [[nodiscard]] double evaluate(double z) const;

  /// Copy with coefficients above `order` dropped.
  [[nodiscard]] FormalLaurentSeries truncated(int order) const;

  FormalLaurentSeries& operator*=(double scalar);

  friend FormalLaurentSeries operator+(const FormalLaurentSeries& lhs,
                                       const FormalLaurentSeries& rhs);
  friend FormalLaurentSeries operator*(const FormalLaurentSeries& lhs,
                                       const FormalLaurentSeries& rhs);
  friend FormalLaurentSeries operator*(double scalar, FormalLaurentSeries series) {
    series *= scalar;
    return series;
  }

 private:
  double center_;
  int min_order_;
  std::vector<double> coeffs_;
};

/// Kernel factors pi cot(pi z), pi / sin(pi z) and psi^{(p-1)}(-z)/(p-1)!.
struct KernelKind {
  enum class Type { cot, csc, psi };

  Type type = Type::cot;
  int p = 1;  // polygamma order + 1, psi kernels only

  static KernelKind cot() { return {Type::cot, 1}; }
  static KernelKind csc() { return {Type::csc, 1}; }
  static KernelKind psi(int p);

  [[nodiscard]] std::string name() const;
};

/*!
  Expansion of a kernel at the integer n, through order K.

  cot and csc have simple poles at every integer. The psi kernel
  psi^{(p-1)}(-z)/(p-1)! has a pole of order p at n >= 0 and is analytic at
  negative integers. For p = 1 the kernel is psi(-z) + gamma and zeta(1) is
  read as 0. Throws DomainError if K is below the pole order.
*/
FormalLaurentSeries expand_at_integer(KernelKind kind, long n, int K);

/// Taylor expansion of a kernel at a non-integer point, through order K.
FormalLaurentSeries expand_at_point(KernelKind kind, double beta, int K,
                                    double guard = default_guard);

/// Coefficient of order -1 in the product of all factors and the rational part.
double residue_of_product(std::span<const FormalLaurentSeries> factors,
                          const FormalLaurentSeries& rational_part);

}  // namespace eulersum
