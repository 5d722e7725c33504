#include "eulersum/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "eulersum/errors.hpp"
#include "eulersum/kahan.hpp"

namespace eulersum {

namespace {

// B_0 .. B_30; odd entries beyond B_1 vanish.
constexpr std::array<double, 31> bernoulli_table = {
    1.0,
    -1.0 / 2.0,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
};

// Argument above which the asymptotic expansions are used directly.
constexpr double asymptotic_threshold = 16.0;
// Number of Bernoulli correction terms (B_2 .. B_20).
constexpr int correction_terms = 10;

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::nearbyint(a); }

void require_not_pole(double a, const char* where) {
  if (!std::isfinite(a)) {
    throw DomainError(std::string(where) + ": argument is not finite");
  }
  if (is_nonpositive_integer(a)) {
    throw PoleError(std::string(where) + ": pole at nonpositive integer " + std::to_string(a));
  }
}

// Euler-Maclaurin tail of the Hurwitz zeta for real s at a >= asymptotic_threshold.
double hurwitz_asymptotic(double s, double a) {
  const double a_pow_s = std::pow(a, -s);
  KahanSum sum;
  sum += a * a_pow_s / (s - 1.0);
  sum += 0.5 * a_pow_s;
  // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * a^{-s-2k+1}
  double rising_over_factorial = s / 2.0;
  double power = a_pow_s / a;
  for (int k = 1; k <= correction_terms; ++k) {
    const double term = bernoulli_table[2 * k] * rising_over_factorial * power;
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * 1e-2 * std::abs(sum.value())) {
      break;
    }
    rising_over_factorial *= (s + 2 * k - 1) * (s + 2 * k) / ((2.0 * k + 1) * (2.0 * k + 2));
    power /= a * a;
  }
  return sum.value();
}

// Shift a up by the recurrence zeta(s;a) = a^{-s} + zeta(s;a+1) until the
// asymptotic expansion applies. Head terms are accumulated smallest-first.
double hurwitz_shifted(double s, double a) {
  int steps = 0;
  if (a < asymptotic_threshold) {
    steps = static_cast<int>(std::ceil(asymptotic_threshold - a));
  }
  KahanSum sum;
  sum += hurwitz_asymptotic(s, a + steps);
  for (int i = steps - 1; i >= 0; --i) {
    sum += std::pow(a + i, -s);
  }
  return sum.value();
}

double digamma_asymptotic(double x) {
  KahanSum sum;
  sum += std::log(x);
  sum -= 0.5 / x;
  const double inv_x2 = 1.0 / (x * x);
  double power = inv_x2;
  for (int k = 1; k <= correction_terms; ++k) {
    sum -= bernoulli_table[2 * k] / (2.0 * k) * power;
    power *= inv_x2;
  }
  return sum.value();
}

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

double integer_distance(double x) { return std::abs(x - std::nearbyint(x)); }

ShiftParam::ShiftParam(double value, double guard) : value_(value), guard_(guard) {
  if (!(guard > 0.0)) {
    throw DomainError("shift guard must be positive");
  }
  if (!std::isfinite(value)) {
    throw DomainError("shift parameter must be finite");
  }
  if (integer_distance(value) < guard) {
    throw DomainError("shift parameter " + std::to_string(value) + " lies within guard " +
                      std::to_string(guard) + " of an integer");
  }
}

double bernoulli(int n) {
  if (n < 0 || n >= static_cast<int>(bernoulli_table.size())) {
    throw DomainError("bernoulli: index out of tabulated range");
  }
  return bernoulli_table[static_cast<std::size_t>(n)];
}

double riemann_zeta(int k) {
  if (k < 2) {
    throw DomainError("riemann_zeta: order must be >= 2, got " + std::to_string(k));
  }
  return hurwitz_shifted(static_cast<double>(k), 1.0);
}

double riemann_zeta_real(double s) {
  if (s == 1.0) {
    throw PoleError("riemann_zeta_real: pole at s = 1");
  }
  if (!std::isfinite(s) || s < -20.0) {
    throw DomainError("riemann_zeta_real: argument outside supported range");
  }
  return hurwitz_shifted(s, 1.0);
}

double alt_zeta(int k) {
  if (k < 1) {
    throw DomainError("alt_zeta: order must be >= 1, got " + std::to_string(k));
  }
  if (k == 1) {
    return std::numbers::ln2;
  }
  return -std::expm1((1 - k) * std::numbers::ln2) * riemann_zeta(k);
}

double hurwitz_zeta(int s, double a) {
  if (s < 2) {
    throw DomainError("hurwitz_zeta: order must be >= 2, got " + std::to_string(s));
  }
  require_not_pole(a, "hurwitz_zeta");
  return hurwitz_shifted(static_cast<double>(s), a);
}

double hurwitz_zeta_conventional(int s, double a) {
  if (s == 1) {
    require_not_pole(a, "hurwitz_zeta_conventional");
    return -(digamma(a) + euler_gamma);
  }
  return hurwitz_zeta(s, a);
}

double hurwitz_zeta_nonpositive(int s, double a) {
  if (s > 0) {
    throw DomainError("hurwitz_zeta_nonpositive: order must be <= 0");
  }
  const int k = -s;
  if (k + 1 >= static_cast<int>(bernoulli_table.size())) {
    throw DomainError("hurwitz_zeta_nonpositive: order out of range");
  }
  // B_{k+1}(a) = sum_j C(k+1, j) B_j a^{k+1-j}
  KahanSum poly;
  for (int j = 0; j <= k + 1; ++j) {
    poly += binomial(k + 1, j) * bernoulli_table[static_cast<std::size_t>(j)] *
            std::pow(a, k + 1 - j);
  }
  return -poly.value() / (k + 1);
}

double alt_hurwitz_zeta(int s, double a) {
  if (s < 1) {
    throw DomainError("alt_hurwitz_zeta: order must be >= 1, got " + std::to_string(s));
  }
  require_not_pole(a, "alt_hurwitz_zeta");
  if (s == 1) {
    return 0.5 * (digamma(0.5 * (a + 1.0)) - digamma(0.5 * a));
  }
  const double scale = std::ldexp(1.0, -s);
  return scale * (hurwitz_shifted(s, 0.5 * a) - hurwitz_shifted(s, 0.5 * (a + 1.0)));
}

double digamma(double a) {
  require_not_pole(a, "digamma");
  if (a == std::nearbyint(a) && a <= asymptotic_threshold) {
    // psi(n) = -gamma + H_{n-1}
    KahanSum h;
    for (long k = static_cast<long>(a) - 1; k >= 1; --k) h += 1.0 / static_cast<double>(k);
    h -= euler_gamma;
    return h.value();
  }
  // psi(a) = psi(a + n) - sum_{i<n} 1/(a+i)
  int steps = 0;
  if (a < asymptotic_threshold) {
    steps = static_cast<int>(std::ceil(asymptotic_threshold - a));
  }
  KahanSum sum;
  sum += digamma_asymptotic(a + steps);
  for (int i = steps - 1; i >= 0; --i) {
    sum -= 1.0 / (a + i);
  }
  return sum.value();
}

double polygamma(int j, double a) {
  if (j < 1) {
    throw DomainError("polygamma: order must be >= 1 (use digamma for j = 0)");
  }
  require_not_pole(a, "polygamma");
  const double sign = (j % 2 == 1) ? 1.0 : -1.0;
  return sign * std::tgamma(j + 1.0) * hurwitz_zeta(j + 1, a);
}

double pi_cot(double a) {
  const double n = std::nearbyint(a);
  const double r = a - n;
  if (r == 0.0) {
    throw PoleError("pi_cot: pole at integer " + std::to_string(a));
  }
  return pi / std::tan(pi * r);
}

double pi_csc(double a) {
  const double n = std::nearbyint(a);
  const double r = a - n;
  if (r == 0.0) {
    throw PoleError("pi_csc: pole at integer " + std::to_string(a));
  }
  const double sign = (std::fmod(std::abs(n), 2.0) == 0.0) ? 1.0 : -1.0;
  return sign * pi / std::sin(pi * r);
}

double zeta_conventional(int k) {
  if (k == 0) {
    return ZetaConvention::zeta_zero;
  }
  if (k == 1) {
    return ZetaConvention::zeta_one;
  }
  return riemann_zeta(k);
}

double alt_zeta_conventional(int k) {
  if (k == 0) {
    return ZetaConvention::alt_zeta_zero;
  }
  return alt_zeta(k);
}

}  // namespace eulersum
