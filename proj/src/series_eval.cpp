#include "eulersum/series_eval.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "eulersum/detail/summation.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

void check_orders(const std::vector<int>& orders) {
  for (int p : orders) {
    if (p < 1) {
      throw DomainError("harmonic orders must be >= 1, got " + std::to_string(p));
    }
  }
}

void check_sigma(int sigma) {
  if (sigma != 1 && sigma != -1) {
    throw DomainError("sigma must be +1 or -1");
  }
}

// The smooth tail models need every pole left of the first tail index.
void check_reach(double extent, const EvalConfig& cfg) {
  if (extent >= 0.5 * static_cast<double>(cfg.effective_terms())) {
    throw DomainError("shift or pole magnitude too large for the truncation depth");
  }
}

}  // namespace

std::string_view to_string(TailMethod method) {
  switch (method) {
    case TailMethod::richardson:
      return "richardson";
    case TailMethod::euler_transform:
      return "euler_transform";
    case TailMethod::raw:
      return "raw";
    case TailMethod::euler_maclaurin:
      return "euler_maclaurin";
    case TailMethod::boole:
      return "boole";
  }
  return "unknown";
}

SeriesValue euler_sum(const EulerSumSpec& spec, const EvalConfig& cfg) {
  cfg.validate();
  check_sigma(spec.sigma);
  check_orders(spec.harmonic_orders);
  if (spec.start_n < 1) {
    throw DomainError("start_n must be >= 1");
  }
  int total_power = 0;
  std::vector<ShiftPower> factors;
  for (const auto& shift : spec.shifts) {
    if (shift.q < 0) {
      throw DomainError("shift powers must be >= 0");
    }
    if (!std::isfinite(shift.a)) {
      throw DomainError("shift parameter must be finite");
    }
    if (shift.q == 0) {
      continue;
    }
    if (!(spec.classical && shift.a == 0.0)) {
      (void)ShiftParam(shift.a, cfg.guard);
    }
    check_reach(std::abs(shift.a), cfg);
    total_power += shift.q;
    const double a = (spec.direction == Direction::forward) ? shift.a : -shift.a;
    factors.push_back({a, shift.q});
  }
  const int needed = spec.sigma > 0 ? 2 : 1;
  if (total_power < needed) {
    throw DomainError("divergent series: total shift power " + std::to_string(total_power) +
                      " < " + std::to_string(needed));
  }
  detail::Summand summand;
  summand.harmonic_orders = spec.harmonic_orders;
  summand.offset = (spec.direction == Direction::forward) ? 0 : -1;
  summand.weight = std::make_shared<detail::PowerProductWeight>(std::move(factors));
  summand.sigma = spec.sigma;
  summand.start = spec.start_n;
  return detail::sum_series(summand, cfg);
}

SeriesValue alt_double_zeta_direct(int j, int m, const EvalConfig& cfg) {
  if (j < 1 || m < 0) {
    throw DomainError("alt_double_zeta_direct needs j >= 1, m >= 0");
  }
  EulerSumSpec spec;
  spec.sigma = -1;
  spec.harmonic_orders = {2 * m + 1};
  spec.shifts = {{0.0, 2 * j}};
  spec.direction = Direction::backward;
  spec.classical = true;
  return euler_sum(spec, cfg);
}

SeriesValue harmonic_rational_sum(const std::vector<int>& harmonic_orders, int offset,
                                  const RationalFunction& weight, int sigma, long start,
                                  const EvalConfig& cfg) {
  cfg.validate();
  check_sigma(sigma);
  check_orders(harmonic_orders);
  for (const auto& term : weight.terms()) {
    if (integer_distance(term.pole) < cfg.guard) {
      throw DomainError("rational weight has a pole within the integer guard");
    }
    check_reach(std::abs(term.pole), cfg);
  }
  detail::Summand summand;
  summand.harmonic_orders = harmonic_orders;
  summand.offset = offset;
  summand.weight = std::make_shared<detail::RationalWeight>(weight);
  summand.sigma = sigma;
  summand.start = start;
  return detail::sum_series(summand, cfg);
}

SeriesValue rational_sum(const RationalFunction& weight, int sigma, long start,
                         const EvalConfig& cfg) {
  return harmonic_rational_sum({}, 0, weight, sigma, start, cfg);
}

WeightedHarmonicSums weighted_harmonic_sum(int p, const RationalFunction& weight, int sigma,
                                           const EvalConfig& cfg) {
  if (p < 1) {
    throw DomainError("weighted_harmonic_sum needs p >= 1");
  }
  return {harmonic_rational_sum({p}, 0, weight, sigma, 0, cfg),
          harmonic_rational_sum({p}, -1, weight.reflected(), sigma, 1, cfg)};
}

}  // namespace eulersum
