#include "eulersum/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulersum/errors.hpp"
#include "eulersum/kahan.hpp"

namespace eulersum {

namespace {

constexpr double pole_match_tolerance = 1e-14;

bool same_pole(double lhs, double rhs) {
  return std::abs(lhs - rhs) <= pole_match_tolerance * std::max(1.0, std::abs(lhs));
}

// Rising factorial (m)_k = m (m+1) ... (m+k-1).
double rising(int m, int k) {
  double result = 1.0;
  for (int i = 0; i < k; ++i) {
    result *= m + i;
  }
  return result;
}

double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

std::vector<PoleTerm> RationalFunction::normalize(std::vector<PoleTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const PoleTerm& lhs, const PoleTerm& rhs) {
    if (lhs.pole != rhs.pole) {
      return lhs.pole < rhs.pole;
    }
    return lhs.multiplicity < rhs.multiplicity;
  });
  std::vector<PoleTerm> merged;
  for (const auto& term : terms) {
    auto match = std::find_if(merged.begin(), merged.end(), [&](const PoleTerm& existing) {
      return existing.multiplicity == term.multiplicity && same_pole(existing.pole, term.pole);
    });
    if (match != merged.end()) {
      match->coeff += term.coeff;
    } else {
      merged.push_back(term);
    }
  }
  return merged;
}

RationalFunction RationalFunction::from_poles(std::vector<PoleTerm> terms, double guard) {
  if (terms.empty()) {
    throw DomainError("rational function needs at least one partial-fraction term");
  }
  for (const auto& term : terms) {
    if (term.multiplicity < 1) {
      throw DomainError("pole multiplicity must be >= 1");
    }
    if (!std::isfinite(term.pole) || !std::isfinite(term.coeff)) {
      throw DomainError("pole and coefficient must be finite");
    }
    if (integer_distance(term.pole) < guard) {
      throw DomainError("pole " + std::to_string(term.pole) +
                        " lies at or within the guard of an integer");
    }
  }
  auto merged = normalize(std::move(terms));
  double simple_sum = 0.0;
  double simple_scale = 0.0;
  for (const auto& term : merged) {
    if (term.multiplicity == 1) {
      simple_sum += term.coeff;
      simple_scale += std::abs(term.coeff);
    }
  }
  if (std::abs(simple_sum) > 1e-12 * simple_scale) {
    throw DomainError("rational function decays only like 1/z: simple-pole coefficients sum to " +
                      std::to_string(simple_sum));
  }
  return RationalFunction(std::move(merged));
}

RationalFunction RationalFunction::linear_pair(double a, double b, double guard) {
  if (a == b) {
    throw DomainError("linear_pair requires a != b");
  }
  const double c = 1.0 / (b - a);
  return from_poles({{-a, 1, c}, {-b, 1, -c}}, guard);
}

std::vector<double> RationalFunction::poles() const {
  std::vector<double> out;
  for (const auto& term : terms_) {
    if (std::none_of(out.begin(), out.end(), [&](double p) { return same_pole(p, term.pole); })) {
      out.push_back(term.pole);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int RationalFunction::multiplicity_at(double pole) const {
  int order = 0;
  for (const auto& term : terms_) {
    if (same_pole(term.pole, pole) && term.coeff != 0.0) {
      order = std::max(order, term.multiplicity);
    }
  }
  return order;
}

double RationalFunction::derivative_at(int k, double x) const {
  if (k < 0) {
    throw DomainError("derivative order must be >= 0");
  }
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  KahanSum sum;
  for (const auto& term : terms_) {
    const double d = x - term.pole;
    if (d == 0.0) {
      throw PoleError("rational function evaluated at its pole " + std::to_string(term.pole));
    }
    sum += term.coeff * sign * rising(term.multiplicity, k) * std::pow(d, -(term.multiplicity + k));
  }
  return sum.value();
}

FormalLaurentSeries RationalFunction::local_series(double center, int K) const {
  const int lowest = -multiplicity_at(center);
  std::vector<double> coeffs(static_cast<std::size_t>(std::max(0, K - lowest + 1)), 0.0);
  for (const auto& term : terms_) {
    if (same_pole(term.pole, center)) {
      const int order = -term.multiplicity;
      if (order <= K) {
        coeffs[static_cast<std::size_t>(order - lowest)] += term.coeff;
      }
      continue;
    }
    // c (w + d)^{-m} = sum_j C(-m, j) d^{-m-j} w^j, d = center - pole
    const double d = center - term.pole;
    const int m = term.multiplicity;
    for (int j = 0; j <= K; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      coeffs[static_cast<std::size_t>(j - lowest)] +=
          term.coeff * sign * binomial(m + j - 1, j) * std::pow(d, -(m + j));
    }
  }
  return {center, lowest, std::move(coeffs)};
}

RationalFunction RationalFunction::derivative(int k) const {
  if (k < 0) {
    throw DomainError("derivative order must be >= 0");
  }
  std::vector<PoleTerm> out;
  out.reserve(terms_.size());
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  for (const auto& term : terms_) {
    out.push_back({term.pole, term.multiplicity + k,
                   term.coeff * sign * rising(term.multiplicity, k)});
  }
  return RationalFunction(normalize(std::move(out)));
}

RationalFunction RationalFunction::reflected() const {
  // c / (-z - beta)^m = (-1)^m c / (z + beta)^m
  std::vector<PoleTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    const double sign = (term.multiplicity % 2 == 0) ? 1.0 : -1.0;
    out.push_back({-term.pole, term.multiplicity, sign * term.coeff});
  }
  return RationalFunction(normalize(std::move(out)));
}

RationalFunction RationalFunction::scaled(double factor) const {
  auto out = terms_;
  for (auto& term : out) {
    term.coeff *= factor;
  }
  return RationalFunction(std::move(out));
}

double RationalFunction::integer_clearance() const {
  double clearance = 0.5;
  for (const auto& term : terms_) {
    clearance = std::min(clearance, integer_distance(term.pole));
  }
  return clearance;
}

RationalFunction operator+(const RationalFunction& lhs, const RationalFunction& rhs) {
  auto terms = lhs.terms_;
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return RationalFunction(RationalFunction::normalize(std::move(terms)));
}

}  // namespace eulersum
