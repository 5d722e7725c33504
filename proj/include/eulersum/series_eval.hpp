#pragma once

#include <string_view>
#include <vector>

#include "eulersum/config.hpp"
#include "eulersum/harmonic.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

enum class TailMethod { richardson, euler_transform, raw, euler_maclaurin, boole };

std::string_view to_string(TailMethod method);

struct ConvergenceDiagnostics {
  long terms_used = 0;
  /// Bound on |returned - exact| from the method's error model plus rounding.
  double tail_estimate = 0.0;
  TailMethod method = TailMethod::raw;
};

struct SeriesValue {
  double value = 0.0;
  ConvergenceDiagnostics diagnostics;
};

enum class Direction {
  forward,   // H_n^{(p)} / prod (n + a_i)^{q_i}
  backward,  // H_{n-1}^{(p)} / prod (n - a_i)^{q_i}
};

struct ShiftPower {
  double a = 0.0;
  int q = 1;
};

/*!
  S^sigma_{p;q}(a_1, ..., a_m) = sum_{n >= start_n} prod_i H_n^{(p_i)} sigma^n / prod_j (n + a_j)^{q_j}.

  Shifts must stay `guard` away from the integers. `classical` admits the
  unshifted value a = 0 for the dedicated classical sums (zeta(2,1), double
  zeta values) and nothing else.
*/
struct EulerSumSpec {
  int sigma = 1;
  std::vector<int> harmonic_orders;
  std::vector<ShiftPower> shifts;
  Direction direction = Direction::forward;
  long start_n = 1;
  bool classical = false;
};

SeriesValue euler_sum(const EulerSumSpec& spec, const EvalConfig& cfg);

/// zeta(2j-bar, 2m+1) = sum_{n>=1} (-1)^n H_{n-1}^{(2m+1)} / n^{2j}, summed directly.
SeriesValue alt_double_zeta_direct(int j, int m, const EvalConfig& cfg);

struct WeightedHarmonicSums {
  SeriesValue forward;   // sum_{n>=0} H_n^{(p)} sigma^n r(n)
  SeriesValue backward;  // sum_{n>=1} H_{n-1}^{(p)} sigma^n r(-n)
};

WeightedHarmonicSums weighted_harmonic_sum(int p, const RationalFunction& weight, int sigma,
                                           const EvalConfig& cfg);

/// sum_{n>=start} prod_i H_{n+offset}^{(p_i)} sigma^n r(n), the general building block.
SeriesValue harmonic_rational_sum(const std::vector<int>& harmonic_orders, int offset,
                                  const RationalFunction& weight, int sigma, long start,
                                  const EvalConfig& cfg);

/// sum_{n>=start} sigma^n r(n).
SeriesValue rational_sum(const RationalFunction& weight, int sigma, long start,
                         const EvalConfig& cfg);

}  // namespace eulersum
