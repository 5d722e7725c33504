#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "eulersum/errors.hpp"
#include "eulersum/rational.hpp"

using namespace eulersum;

namespace {

bool close(double x, double y, double tol) { return std::abs(x - y) <= tol; }

double direct(const std::vector<PoleTerm>& terms, double x) {
  double s = 0.0;
  for (const auto& t : terms) s += t.coeff / std::pow(x - t.pole, t.multiplicity);
  return s;
}

const std::vector<PoleTerm> three_poles = {
    {-0.3, 1, 1.0}, {-0.7, 1, -2.5}, {-1.9, 1, 1.5}, {-0.5, 2, 0.75}, {1.35, 3, -0.2}};

}  // namespace

TEST_CASE("construction and validation") {
  const auto pair = RationalFunction::from_poles({{-0.3, 1, 1.0 / 0.4}, {-0.7, 1, -1.0 / 0.4}});
  CHECK(close(pair(2.0), 1.0 / (2.3 * 2.7), 1e-15));
  const auto linear = RationalFunction::linear_pair(0.3, 0.7);
  CHECK(close(linear(2.0), pair(2.0), 1e-15));

  const auto square = RationalFunction::from_poles({{-0.5, 2, 1.0}});
  CHECK(square(0.0) == 4.0);
  CHECK(square.multiplicity_at(-0.5) == 2);

  CHECK_THROWS_AS(RationalFunction::from_poles({{-0.3, 1, 1.0}}), DomainError);
  CHECK_THROWS_AS(RationalFunction::from_poles({{2.0, 2, 1.0}}), DomainError);
  CHECK_THROWS_AS(RationalFunction::from_poles({{2.0005, 2, 1.0}}), DomainError);
  CHECK_THROWS_AS(RationalFunction::from_poles({{-0.3, 0, 1.0}}), DomainError);
  CHECK_THROWS_AS(RationalFunction::from_poles({}), DomainError);
  CHECK_THROWS_AS(RationalFunction::linear_pair(0.3, 0.3), DomainError);
}

TEST_CASE("duplicate terms are merged") {
  const auto r = RationalFunction::from_poles({{-0.5, 2, 1.0}, {-0.5, 2, 2.0}, {-1.5, 3, 1.0}});
  CHECK(r.terms().size() == 2);
  CHECK(r(1.0) == doctest::Approx(3.0 / 2.25 + 1.0 / std::pow(2.5, 3)).epsilon(1e-15));
  const auto poles = r.poles();
  REQUIRE(poles.size() == 2);
  CHECK(poles[0] == -1.5);
  CHECK(poles[1] == -0.5);
}

TEST_CASE("derivative examples") {
  const auto square = RationalFunction::from_poles({{-0.5, 2, 1.0}});
  CHECK(square.derivative_at(1, 0.0) == -16.0);
  const auto r = RationalFunction::linear_pair(0.3, 0.7);
  CHECK(close(derivative_at(r, 0, 1.0), 1.0 / (1.3 * 1.7), 1e-15));

  // third derivative by central differences with one Richardson step
  const double x = 2.0;
  auto d3 = [&](double h) {
    return (r(x + 2 * h) - 2 * r(x + h) + 2 * r(x - h) - r(x - 2 * h)) / (2 * h * h * h);
  };
  const double h = 1e-3;
  const double fd = (4.0 * d3(h / 2) - d3(h)) / 3.0;
  CHECK(close(r.derivative_at(3, x), fd, 1e-7));

  CHECK_THROWS_AS(static_cast<void>(r.derivative_at(0, -0.3)), PoleError);
}

TEST_CASE("evaluation matches the partial fractions") {
  const auto r = RationalFunction::from_poles(three_poles);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  int checked = 0;
  while (checked < 100) {
    const double x = dist(rng);
    bool near_pole = false;
    for (double p : r.poles()) near_pole = near_pole || std::abs(x - p) < 0.05;
    if (near_pole) continue;
    CHECK(close(r(x), direct(three_poles, x), 1e-12 * (1.0 + std::abs(r(x)))));
    ++checked;
  }
}

TEST_CASE("decay at infinity") {
  for (const auto& r : {RationalFunction::from_poles(three_poles), RationalFunction::linear_pair(0.3, 0.7),
                        RationalFunction::from_poles({{-0.5, 2, 1.0}})}) {
    double previous = 0.0;
    for (double R : {1e3, 1e4, 1e5}) {
      const double scaled = std::abs(r(R)) * R * R;
      CHECK(scaled < 10.0);
      if (previous > 0.0) CHECK(std::abs(scaled - previous) < 0.05 * previous + 1e-9);
      previous = scaled;
    }
  }
}

TEST_CASE("linearity") {
  const auto r = RationalFunction::from_poles(three_poles);
  const auto s = RationalFunction::linear_pair(1.4, 2.6);
  const double alpha = -1.75;
  const auto combo = r.scaled(alpha) + s;
  for (int k = 0; k <= 4; ++k) {
    for (double x : {0.1, 2.3, -3.2, 5.0}) {
      const double expected = alpha * r.derivative_at(k, x) + s.derivative_at(k, x);
      CHECK(close(combo.derivative_at(k, x), expected, 1e-12 * (1.0 + std::abs(expected))));
    }
  }
}

TEST_CASE("derivative and reflection as functions") {
  const auto r = RationalFunction::from_poles(three_poles);
  for (int k = 0; k <= 3; ++k) {
    const auto dk = r.derivative(k);
    for (double x : {0.1, 2.3, -3.2}) {
      CHECK(close(dk(x), r.derivative_at(k, x), 1e-12 * (1.0 + std::abs(dk(x)))));
    }
  }
  const auto reflected = r.reflected();
  for (double x : {0.1, 2.3, -3.2}) CHECK(close(reflected(x), r(-x), 1e-14));
  CHECK(close(r.integer_clearance(), 0.1, 1e-15));
}

TEST_CASE("local series") {
  const auto square = RationalFunction::from_poles({{-0.5, 2, 1.0}});
  const auto at_pole = square.local_series(-0.5, 0);
  CHECK(at_pole.min_order() == -2);
  CHECK(at_pole.coefficient(-2) == 1.0);
  CHECK(at_pole.coefficient(-1) == 0.0);
  CHECK(at_pole.coefficient(0) == 0.0);

  const auto r = RationalFunction::linear_pair(0.3, 0.7);
  const auto taylor = r.local_series(0.0, 2);
  CHECK(taylor.min_order() == 0);
  CHECK(close(taylor.coefficient(0), r.derivative_at(0, 0.0), 1e-15));
  CHECK(close(taylor.coefficient(1), r.derivative_at(1, 0.0), 1e-14));
  CHECK(close(taylor.coefficient(2), r.derivative_at(2, 0.0) / 2.0, 1e-13));

  const auto mixed = RationalFunction::from_poles(three_poles);
  const auto s = mixed.local_series(-0.5, 8);
  CHECK(s.min_order() == -2);
  const double z = -0.5 + 1e-2;
  CHECK(close(s.evaluate(z), mixed(z), 1e-10 * std::abs(mixed(z))));
}
