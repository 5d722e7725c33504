#pragma once

#include <numbers>

namespace eulersum {

inline constexpr double pi = std::numbers::pi;
/// Euler-Mascheroni constant, -psi(1).
inline constexpr double euler_gamma = 0.577215664901532860606512090082;

/// Default minimum distance from a shift parameter to the nearest integer.
inline constexpr double default_guard = 1e-3;

/// Distance from x to the nearest integer.
double integer_distance(double x);

/*!
  A real shift parameter a with a ∉ ℤ, kept at least `guard` away from every
  integer. Construction throws DomainError otherwise.
*/
class ShiftParam {
 public:
  ShiftParam(double value, double guard = default_guard);

  [[nodiscard]] double value() const { return value_; }
  [[nodiscard]] double guard() const { return guard_; }
  operator double() const { return value_; }

 private:
  double value_;
  double guard_;
};

/// Values some identities assign to the divergent or degenerate zeta slots.
struct ZetaConvention {
  static constexpr double zeta_zero = -0.5;
  static constexpr double zeta_one = 0.0;
  static constexpr double alt_zeta_zero = 0.5;
};

/// Bernoulli number B_n for 0 <= n <= 30 (B_1 = -1/2).
double bernoulli(int n);

/// Riemann zeta at an integer k >= 2.
double riemann_zeta(int k);

/// Riemann zeta at any real s != 1, analytically continued for s < 1.
double riemann_zeta_real(double s);

/// Alternating zeta (Dirichlet eta), k >= 1.
double alt_zeta(int k);

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for integer s >= 2 and a not in {0,-1,-2,...}.
double hurwitz_zeta(int s, double a);

/// Hurwitz zeta extended to s = 1 by zeta(1;a) := -(psi(a) + gamma).
double hurwitz_zeta_conventional(int s, double a);

/// Hurwitz zeta at a nonpositive integer s = -k, i.e. -B_{k+1}(a)/(k+1).
double hurwitz_zeta_nonpositive(int s, double a);

/// Alternating Hurwitz zeta sum_{n>=0} (-1)^n (n+a)^{-s}, s >= 1.
double alt_hurwitz_zeta(int s, double a);

double digamma(double a);

/// psi^{(j)}(a) = (-1)^{j+1} j! zeta(j+1; a), j >= 1.
double polygamma(int j, double a);

/// pi cot(pi a), a not an integer.
double pi_cot(double a);

/// pi / sin(pi a), a not an integer.
double pi_csc(double a);

/// zeta(k) for k >= 0 under ZetaConvention (zeta(0) = -1/2, zeta(1) = 0).
double zeta_conventional(int k);

/// Alternating zeta for k >= 0 under ZetaConvention (alt_zeta(0) = 1/2).
double alt_zeta_conventional(int k);

}  // namespace eulersum
