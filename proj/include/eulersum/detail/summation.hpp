#pragma once

#include <memory>
#include <vector>

#include "eulersum/config.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/series_eval.hpp"

namespace eulersum::detail {

/// Smooth weight w(x) multiplying the harmonic factors of a summand.
class Weight {
 public:
  virtual ~Weight() = default;
  [[nodiscard]] virtual double value(double x) const = 0;
  /// Taylor coefficients w^{(j)}(x)/j! for j = 0..order.
  [[nodiscard]] virtual std::vector<double> taylor(double x, int order) const = 0;
};

/// prod_i (x + shift_i)^{-power_i}
class PowerProductWeight final : public Weight {
 public:
  explicit PowerProductWeight(std::vector<ShiftPower> factors);
  [[nodiscard]] double value(double x) const override;
  [[nodiscard]] std::vector<double> taylor(double x, int order) const override;

 private:
  std::vector<ShiftPower> factors_;
};

class RationalWeight final : public Weight {
 public:
  explicit RationalWeight(RationalFunction r) : r_(std::move(r)) {}
  [[nodiscard]] double value(double x) const override { return r_(x); }
  [[nodiscard]] std::vector<double> taylor(double x, int order) const override;

 private:
  RationalFunction r_;
};

/// sum_{n>=start} sigma^n prod_i H_{n+offset}^{(orders_i)} w(n), offset in {0, -1}.
struct Summand {
  std::vector<int> harmonic_orders;
  int offset = 0;
  std::shared_ptr<const Weight> weight;
  int sigma = 1;
  long start = 1;
};

/// Direct head of `cfg.effective_terms()` terms plus the tail selected by cfg.acceleration.
SeriesValue sum_series(const Summand& summand, const EvalConfig& cfg);

/// Taylor coefficients of x -> H_{x+offset}^{(p)} at the integer n, orders 0..order.
std::vector<double> harmonic_taylor(long n, int p, int offset, double value_at_n, int order);

/// H_{x}^{(p)} at real x >= 0 via psi(x+1)+gamma or zeta(p) - zeta(p; x+1).
double harmonic_real(double x, int p);

}  // namespace eulersum::detail
