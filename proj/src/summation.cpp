#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <string>

#include "eulersum/detail/summation.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/kahan.hpp"
#include "eulersum/special_fn.hpp"

namespace eulersum::detail {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
// Euler-Maclaurin correction terms B_2 .. B_12.
constexpr int em_terms = 6;
constexpr int euler_transform_terms = 12;
constexpr int boole_order = 13;
constexpr int richardson_unknowns = 7;

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::vector<double> multiply_truncated(const std::vector<double>& lhs,
                                       const std::vector<double>& rhs, int order) {
  std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      out[static_cast<std::size_t>(i + j)] +=
          lhs[static_cast<std::size_t>(i)] * rhs[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

TailMethod resolve_method(Acceleration acceleration, int sigma) {
  const bool alternating = sigma < 0;
  switch (acceleration) {
    case Acceleration::automatic:
      return alternating ? TailMethod::euler_transform : TailMethod::euler_maclaurin;
    case Acceleration::euler_maclaurin:
      if (alternating) {
        throw DomainError("euler_maclaurin acceleration needs a non-alternating series");
      }
      return TailMethod::euler_maclaurin;
    case Acceleration::richardson:
      if (alternating) {
        throw DomainError("richardson acceleration needs a non-alternating series");
      }
      return TailMethod::richardson;
    case Acceleration::euler_transform:
      if (!alternating) {
        throw DomainError("euler_transform acceleration needs an alternating series");
      }
      return TailMethod::euler_transform;
    case Acceleration::boole:
      if (!alternating) {
        throw DomainError("boole acceleration needs an alternating series");
      }
      return TailMethod::boole;
    case Acceleration::raw:
      return TailMethod::raw;
  }
  throw DomainError("unknown acceleration");
}

struct Tail {
  double value = 0.0;
  double error = 0.0;
};

class SummandEvaluator {
 public:
  SummandEvaluator(const Summand& summand, long max_index)
      : summand_(summand),
        cache_(max_index + summand.offset, summand.harmonic_orders) {
    for (int p : summand_.harmonic_orders) {
      zeta_values_.push_back(p == 1 ? 0.0 : riemann_zeta(p));
    }
  }

  /// Unsigned term f(n) at an integer n.
  [[nodiscard]] double at(long n) const {
    double value = summand_.weight->value(static_cast<double>(n));
    for (int p : summand_.harmonic_orders) {
      value *= cache_(n + summand_.offset, p);
    }
    return value;
  }

  /// f(x) at real x >= start.
  [[nodiscard]] double at_real(double x) const {
    double value = summand_.weight->value(x);
    const double shifted = x + summand_.offset;
    for (std::size_t i = 0; i < summand_.harmonic_orders.size(); ++i) {
      const int p = summand_.harmonic_orders[i];
      const double h = (p == 1) ? digamma(shifted + 1.0) + euler_gamma
                                : zeta_values_[i] - hurwitz_zeta(p, shifted + 1.0);
      value *= h;
    }
    return value;
  }

  /// Taylor coefficients f^{(j)}(n)/j!, j = 0..order.
  [[nodiscard]] std::vector<double> jet(long n, int order) const {
    auto result = summand_.weight->taylor(static_cast<double>(n), order);
    for (int p : summand_.harmonic_orders) {
      const auto factor =
          harmonic_taylor(n, p, summand_.offset, cache_(n + summand_.offset, p), order);
      result = multiply_truncated(result, factor, order);
    }
    return result;
  }

  [[nodiscard]] int log_power() const {
    return static_cast<int>(std::count(summand_.harmonic_orders.begin(),
                                       summand_.harmonic_orders.end(), 1));
  }

 private:
  const Summand& summand_;
  HarmonicCache cache_;
  std::vector<double> zeta_values_;
};

double sign_of(long n, int sigma) { return (sigma < 0 && (n % 2 != 0)) ? -1.0 : 1.0; }

// sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_k B_{2k}/(2k) f_{2k-1}, f_j = f^{(j)}(N)/j!
Tail euler_maclaurin_tail(const SummandEvaluator& f, long N) {
  const auto jet = f.jet(N, 2 * em_terms + 1);
  boost::math::quadrature::exp_sinh<double> integrator;
  double quad_error = 0.0;
  double l1 = 0.0;
  const double integral = integrator.integrate([&](double x) { return f.at_real(x); },
                                               static_cast<double>(N),
                                               std::numeric_limits<double>::infinity(),
                                               1e-15, &quad_error, &l1);
  KahanSum tail;
  tail += integral;
  tail += 0.5 * jet[0];
  for (int k = 1; k <= em_terms; ++k) {
    tail -= bernoulli(2 * k) / (2.0 * k) * jet[static_cast<std::size_t>(2 * k - 1)];
  }
  const double next =
      std::abs(bernoulli(2 * em_terms + 2) / (2.0 * em_terms + 2) *
               jet[static_cast<std::size_t>(2 * em_terms + 1)]);
  // exp_sinh reports a relative-style estimate; keep at least a few ulps of the L1 norm.
  const double quad_bound = std::max(quad_error, 8.0 * eps * l1);
  return {tail.value(), 2.0 * next + quad_bound};
}

// sum_{n>=N} (-1)^n f(n) = (-1)^N sum_k (-1)^k Delta^k f(N) / 2^{k+1}
Tail euler_transform_tail(const SummandEvaluator& f, long N) {
  std::vector<double> diffs(static_cast<std::size_t>(euler_transform_terms) + 1);
  double magnitude = 0.0;
  for (int i = 0; i <= euler_transform_terms; ++i) {
    diffs[static_cast<std::size_t>(i)] = f.at(N + i);
    magnitude = std::max(magnitude, std::abs(diffs[static_cast<std::size_t>(i)]));
  }
  KahanSum tail;
  double scale = 0.5;
  double last = 0.0;
  for (int k = 0; k <= euler_transform_terms; ++k) {
    const double delta = diffs[0];
    if (k == euler_transform_terms) {
      last = std::abs(delta) * scale;
      break;
    }
    tail += ((k % 2 == 0) ? 1.0 : -1.0) * delta * scale;
    scale *= 0.5;
    for (std::size_t i = 0; i + 1 < diffs.size() - static_cast<std::size_t>(k); ++i) {
      diffs[i] = diffs[i + 1] - diffs[i];
    }
  }
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  return {sign * tail.value(), last + 4.0 * eps * magnitude};
}

// sum_{n>=0} (-1)^n f(n+N) ~ (1/2) sum_k E_k(0) f^{(k)}(N)/k!
Tail boole_tail(const SummandEvaluator& f, long N) {
  const auto jet = f.jet(N, boole_order + 2);
  auto euler_at_zero = [](int k) -> double {
    if (k == 0) {
      return 1.0;
    }
    if (k % 2 == 0) {
      return 0.0;
    }
    const int j = k + 1;
    return -2.0 * (std::ldexp(1.0, j) - 1.0) * bernoulli(j) / j;
  };
  KahanSum tail;
  for (int k = 0; k <= boole_order; ++k) {
    tail += 0.5 * euler_at_zero(k) * jet[static_cast<std::size_t>(k)];
  }
  const double next = std::abs(0.5 * euler_at_zero(boole_order + 2) *
                               jet[static_cast<std::size_t>(boole_order + 2)]);
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  return {sign * tail.value(), 2.0 * next + 4.0 * eps * std::abs(jet[0])};
}

// Fit S(N) = S + sum_{k,l} c_{kl} N^{-k} log^l N through the last rows.
double richardson_fit(const std::vector<double>& sizes, const std::vector<double>& sums,
                      int log_power, int unknowns, std::size_t first_row) {
  Eigen::MatrixXd A(unknowns, unknowns);
  Eigen::VectorXd rhs(unknowns);
  for (int row = 0; row < unknowns; ++row) {
    const double n = sizes[first_row + static_cast<std::size_t>(row)];
    const double log_n = std::log(n);
    A(row, 0) = 1.0;
    int col = 1;
    for (int k = 1; col < unknowns; ++k) {
      double term = std::pow(n, -k);
      for (int l = 0; l <= log_power && col < unknowns; ++l) {
        A(row, col++) = term;
        term *= log_n;
      }
    }
    rhs(row) = sums[first_row + static_cast<std::size_t>(row)];
  }
  // equilibrate columns before solving
  Eigen::VectorXd scale = A.cwiseAbs().colwise().maxCoeff().transpose();
  for (int col = 0; col < unknowns; ++col) {
    A.col(col) /= scale(col);
  }
  const Eigen::VectorXd solution = A.colPivHouseholderQr().solve(rhs);
  return solution(0) / scale(0);
}

}  // namespace

std::vector<double> harmonic_taylor(long n, int p, int offset, double value_at_n, int order) {
  // d^j/dx^j H_{x+offset}^{(p)} / j! = -(-1)^j C(p+j-1, j) zeta(p+j; x+offset+1)
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = value_at_n;
  const double point = static_cast<double>(n + offset) + 1.0;
  for (int j = 1; j <= order; ++j) {
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;
    coeffs[static_cast<std::size_t>(j)] = sign * binomial(p + j - 1, j) * hurwitz_zeta(p + j, point);
  }
  return coeffs;
}

double harmonic_real(double x, int p) {
  if (x < 0.0) {
    throw DomainError("harmonic_real: x must be >= 0");
  }
  if (p == 1) {
    return digamma(x + 1.0) + euler_gamma;
  }
  return riemann_zeta(p) - hurwitz_zeta(p, x + 1.0);
}

PowerProductWeight::PowerProductWeight(std::vector<ShiftPower> factors)
    : factors_(std::move(factors)) {
  std::erase_if(factors_, [](const ShiftPower& f) { return f.q == 0; });
}

double PowerProductWeight::value(double x) const {
  double value = 1.0;
  for (const auto& f : factors_) {
    value *= std::pow(x + f.a, -f.q);
  }
  return value;
}

std::vector<double> PowerProductWeight::taylor(double x, int order) const {
  std::vector<double> result(static_cast<std::size_t>(order) + 1, 0.0);
  result[0] = 1.0;
  for (const auto& f : factors_) {
    // (x + a + t)^{-q} = sum_j (-1)^j C(q+j-1, j) (x+a)^{-q-j} t^j
    std::vector<double> factor(static_cast<std::size_t>(order) + 1);
    const double base = x + f.a;
    double power = std::pow(base, -f.q);
    for (int j = 0; j <= order; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      factor[static_cast<std::size_t>(j)] = sign * binomial(f.q + j - 1, j) * power;
      power /= base;
    }
    result = multiply_truncated(result, factor, order);
  }
  return result;
}

std::vector<double> RationalWeight::taylor(double x, int order) const {
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
  double factorial = 1.0;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) {
      factorial *= j;
    }
    coeffs[static_cast<std::size_t>(j)] = r_.derivative_at(j, x) / factorial;
  }
  return coeffs;
}

SeriesValue sum_series(const Summand& summand, const EvalConfig& cfg) {
  cfg.validate();
  if (summand.sigma != 1 && summand.sigma != -1) {
    throw DomainError("sigma must be +1 or -1");
  }
  if (summand.offset != 0 && summand.offset != -1) {
    throw DomainError("harmonic offset must be 0 or -1");
  }
  if (summand.start < 0 || summand.start + summand.offset < 0) {
    throw DomainError("series start index makes a harmonic index negative");
  }
  if (!summand.weight) {
    throw DomainError("summand has no weight");
  }
  const TailMethod method = resolve_method(cfg.acceleration, summand.sigma);
  const long count = cfg.effective_terms();
  const int levels = richardson_unknowns;
  const long head_end = (method == TailMethod::richardson)
                            ? summand.start + count * (1L << (levels - 1))
                            : summand.start + count;
  const SummandEvaluator f(summand, head_end + euler_transform_terms + 2);

  KahanSum head;
  double abs_sum = 0.0;
  std::vector<double> checkpoint_sizes;
  std::vector<double> checkpoint_sums;
  long next_checkpoint = summand.start + count;
  for (long n = summand.start; n < head_end; ++n) {
    const double term = sign_of(n, summand.sigma) * f.at(n);
    head += term;
    abs_sum += std::abs(term);
    if (n + 1 == next_checkpoint) {
      checkpoint_sizes.push_back(static_cast<double>(n + 1));
      checkpoint_sums.push_back(head.value());
      next_checkpoint = summand.start + 2 * (next_checkpoint - summand.start);
    }
  }

  SeriesValue result;
  result.diagnostics.method = method;
  Tail tail;
  switch (method) {
    case TailMethod::euler_maclaurin:
      tail = euler_maclaurin_tail(f, head_end);
      break;
    case TailMethod::euler_transform:
      tail = euler_transform_tail(f, head_end);
      break;
    case TailMethod::boole:
      tail = boole_tail(f, head_end);
      break;
    case TailMethod::raw: {
      const Tail omitted = summand.sigma > 0 ? euler_maclaurin_tail(f, head_end)
                                             : euler_transform_tail(f, head_end);
      tail = {0.0, std::abs(omitted.value) + omitted.error};
      break;
    }
    case TailMethod::richardson: {
      const int log_power = std::min(f.log_power(), 2);
      const double full = richardson_fit(checkpoint_sizes, checkpoint_sums, log_power, levels, 0);
      const double reduced =
          richardson_fit(checkpoint_sizes, checkpoint_sums, log_power, levels - 1, 1);
      tail = {full - head.value(), std::abs(full - reduced)};
      break;
    }
  }
  KahanSum total = head;
  total += tail.value;
  result.value = total.value();
  result.diagnostics.terms_used = head_end - summand.start;
  result.diagnostics.tail_estimate =
      tail.error + 16.0 * eps * (abs_sum + std::abs(tail.value));
  return result;
}

}  // namespace eulersum::detail
