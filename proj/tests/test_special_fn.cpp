#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "eulersum/errors.hpp"
#include "eulersum/kahan.hpp"
#include "eulersum/special_fn.hpp"

using namespace eulersum;

namespace {

constexpr double ln2 = std::numbers::ln2;

bool close(double x, double y, double tol) { return std::abs(x - y) <= tol; }

bool rel_close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

// sum_{n<N} (n+a)^{-s} + Euler-Maclaurin remainder through B_4
double hurwitz_brute(int s, double a, long N) {
  KahanSum sum;
  for (long n = N - 1; n >= 0; --n) sum += std::pow(n + a, -s);
  const double x = N + a;
  sum += std::pow(x, 1 - s) / (s - 1) + 0.5 * std::pow(x, -s) + s * std::pow(x, -s - 1) / 12.0 -
         s * (s + 1.0) * (s + 2.0) * std::pow(x, -s - 3) / 720.0;
  return sum.value();
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1.0);
  CHECK(bernoulli(1) == -0.5);
  CHECK(bernoulli(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(bernoulli(3) == 0.0);
  CHECK(bernoulli(12) == doctest::Approx(-691.0 / 2730.0).epsilon(1e-15));
  CHECK_THROWS_AS(bernoulli(31), DomainError);
}

TEST_CASE("riemann zeta at integers") {
  const double z2 = riemann_zeta(2);
  CHECK(rel_close(z2, pi * pi / 6.0, 1e-15));
  CHECK(std::abs(z2 * z2 - 2.5 * riemann_zeta(4)) < 1e-14);
  CHECK(rel_close(riemann_zeta(3), 1.2020569031595942854, 1e-15));
  CHECK(rel_close(riemann_zeta(6), std::pow(pi, 6) / 945.0, 1e-15));
  CHECK_THROWS_AS(riemann_zeta(1), DomainError);
  CHECK_THROWS_AS(riemann_zeta(0), DomainError);
}

TEST_CASE("riemann zeta at real arguments") {
  CHECK(close(riemann_zeta_real(0.0), -0.5, 1e-15));
  CHECK(close(riemann_zeta_real(-1.0), -1.0 / 12.0, 1e-14));
  CHECK(close(riemann_zeta_real(0.5), -1.46035450880958681289, 1e-13));
  CHECK(close(riemann_zeta_real(2.5), 1.34148725725091717975676969335, 1e-13));
  CHECK_THROWS_AS(riemann_zeta_real(1.0), PoleError);
}

TEST_CASE("conventional zeta values") {
  CHECK(zeta_conventional(0) == -0.5);
  CHECK(zeta_conventional(1) == 0.0);
  CHECK(zeta_conventional(2) == riemann_zeta(2));
  CHECK(alt_zeta_conventional(0) == 0.5);
  CHECK(alt_zeta_conventional(1) == alt_zeta(1));
}

TEST_CASE("alternating zeta") {
  CHECK(close(alt_zeta(1), ln2, 1e-15));
  CHECK(close(alt_zeta(2), pi * pi / 12.0, 1e-15));
  CHECK(close(alt_zeta(3), 0.75 * riemann_zeta(3), 1e-15));

  // averaged partial sums of sum (-1)^{n-1}/n^3
  std::vector<double> partial;
  KahanSum s;
  for (int n = 1; n <= 40; ++n) {
    s += (n % 2 == 1 ? 1.0 : -1.0) / std::pow(n, 3);
    partial.push_back(s.value());
  }
  for (int level = 0; level < 30; ++level) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    partial.pop_back();
  }
  CHECK(close(alt_zeta(3), partial.back(), 1e-13));

  for (int k = 2; k <= 10; ++k) {
    CHECK(close(alt_zeta(k), (1.0 - std::pow(2.0, 1 - k)) * riemann_zeta(k), 1e-14));
  }
  CHECK_THROWS_AS(alt_zeta(0), DomainError);
}

TEST_CASE("hurwitz zeta examples") {
  CHECK(rel_close(hurwitz_zeta(2, 1.0), pi * pi / 6.0, 1e-15));
  CHECK(rel_close(hurwitz_zeta(2, 0.5), pi * pi / 2.0, 1e-15));
  const double brute = hurwitz_brute(3, 0.3, 1000000);
  CHECK(close(hurwitz_zeta(3, 0.3), brute, 1e-10));
  CHECK(rel_close(hurwitz_zeta(3, 0.3), 37.6362682943630153333846652575, 1e-14));
  CHECK(rel_close(hurwitz_zeta(5, -1.3), -405.762452250739512722036149448, 1e-13));
  CHECK_THROWS_AS(hurwitz_zeta(2, 0.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(2, -3.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(1, 0.5), DomainError);
}

TEST_CASE("hurwitz zeta at nonpositive orders") {
  for (double a : {0.3, 1.7, -0.4}) {
    CHECK(close(hurwitz_zeta_nonpositive(0, a), 0.5 - a, 1e-15));
    CHECK(close(hurwitz_zeta_nonpositive(-1, a), -(a * a - a + 1.0 / 6.0) / 2.0, 1e-14));
  }
}

TEST_CASE("hurwitz zeta with the s = 1 convention") {
  CHECK(close(hurwitz_zeta_conventional(1, 1.0), 0.0, 1e-15));
  CHECK(close(hurwitz_zeta_conventional(1, 0.5), 2.0 * ln2, 1e-14));
  CHECK(rel_close(hurwitz_zeta_conventional(2, 1.0), pi * pi / 6.0, 1e-15));
}

TEST_CASE("digamma") {
  CHECK(close(digamma(1.0), -euler_gamma, 1e-15));
  CHECK(close(digamma(2.0), 1.0 - euler_gamma, 1e-15));
  CHECK(close(digamma(0.7), -1.22002355369793461474860724456, 1e-14));

  // defining series to 1e7 terms with a midpoint-rule tail
  const double z = 0.7;
  const long N = 10000000;
  KahanSum s;
  for (long n = N - 1; n >= 0; --n) s += 1.0 / (n + 1.0) - 1.0 / (n + z);
  s -= std::log((N + 0.5) / (N - 0.5 + z));
  CHECK(close(digamma(z), -euler_gamma + s.value(), 1e-10));

  // recurrence and duplication
  for (double x : {0.15, 0.5, 1.3, 4.75, -0.35, -2.6}) {
    CHECK(close(digamma(x + 1.0), digamma(x) + 1.0 / x, 1e-12 * (1.0 + std::abs(1.0 / x))));
    CHECK(close(digamma(2.0 * x), 0.5 * digamma(x) + 0.5 * digamma(x + 0.5) + ln2,
                1e-12 * (1.0 + std::abs(digamma(2.0 * x)))));
  }
  CHECK_THROWS_AS(digamma(0.0), PoleError);
  CHECK_THROWS_AS(digamma(-2.0), PoleError);
}

TEST_CASE("polygamma") {
  CHECK(rel_close(polygamma(1, 1.0), pi * pi / 6.0, 1e-15));
  CHECK(rel_close(polygamma(2, 1.0), -2.0 * riemann_zeta(3), 1e-15));
  CHECK(rel_close(polygamma(1, 0.5), pi * pi / 2.0, 1e-15));
  CHECK_THROWS_AS(polygamma(1, -1.0), PoleError);
  CHECK_THROWS_AS(polygamma(0, 1.0), DomainError);
}

TEST_CASE("polygamma is the Hurwitz relation bit for bit") {
  double factorial = 1.0;
  for (int j = 1; j <= 8; ++j) {
    factorial *= j;
    for (double a : {0.3, 0.7, 1.4, 2.6, -0.6, -1.25, 7.5}) {
      const double sign = (j % 2 == 1) ? 1.0 : -1.0;
      CHECK(polygamma(j, a) == sign * factorial * hurwitz_zeta(j + 1, a));
    }
  }
}

TEST_CASE("cotangent and cosecant kernels") {
  CHECK(close(pi_cot(0.5), 0.0, 1e-15));
  CHECK(close(pi_csc(0.5), pi, 1e-15));
  CHECK(close(pi_cot(0.25), pi, 1e-14));
  CHECK(close(pi_csc(0.25), pi * std::sqrt(2.0), 1e-14));
  CHECK(close(pi_cot(10.3), pi_cot(0.3), 1e-13));
  CHECK(close(pi_csc(10.3), pi_csc(0.3), 1e-13));
  CHECK(close(pi_csc(1.3), -pi_csc(0.3), 1e-13));
  CHECK_THROWS_AS(pi_cot(3.0), PoleError);
  CHECK_THROWS_AS(pi_csc(-1.0), PoleError);
}

TEST_CASE("reflection consistency of cot and csc") {
  for (int i = -60; i <= 60; ++i) {
    const double a = 0.025 + 0.05 * i;
    if (integer_distance(a) < 0.05 - 1e-12) continue;
    CAPTURE(a);
    CHECK(std::abs(pi_cot(a) + pi_cot(1.0 - a)) < 1e-13);
    CHECK(std::abs(pi_csc(a) - pi_csc(1.0 - a)) < 1e-13);
  }
}

TEST_CASE("Hurwitz recurrence") {
  for (int s = 2; s <= 6; ++s) {
    for (int i = 1; i <= 60; ++i) {
      const double a = 0.05 * i;
      if (integer_distance(a) < 1e-9) continue;
      CAPTURE(s);
      CAPTURE(a);
      const double lhs = hurwitz_zeta(s, a);
      CHECK(rel_close(lhs, hurwitz_zeta(s, a + 1.0) + std::pow(a, -s), 1e-12));
    }
  }
}

TEST_CASE("alternating split") {
  for (int s = 1; s <= 6; ++s) {
    for (int i = 1; i <= 60; ++i) {
      const double a = 0.05 * i;
      if (integer_distance(a) < 1e-9) continue;
      CAPTURE(s);
      CAPTURE(a);
      const double target = std::pow(a, -s);
      CHECK(rel_close(alt_hurwitz_zeta(s, a) + alt_hurwitz_zeta(s, a + 1.0), target, 1e-12));
    }
  }
}

TEST_CASE("alternating Hurwitz zeta") {
  CHECK(close(alt_hurwitz_zeta(1, 1.0), ln2, 1e-15));
  CHECK(close(alt_hurwitz_zeta(2, 1.0), pi * pi / 12.0, 1e-15));
  CHECK(close(alt_hurwitz_zeta(2, 0.25), 15.4967375679869064973001805479, 1e-13));
  CHECK(close(alt_hurwitz_zeta(1, 0.3), 2.82532194188286764011326418174, 1e-13));

  // paired direct summation, with the remaining pairs approximated by an integral
  const double a = 0.25;
  const long pairs = 1000000;
  KahanSum s;
  for (long k = pairs - 1; k >= 0; --k) {
    s += std::pow(2.0 * k + a, -2) - std::pow(2.0 * k + 1.0 + a, -2);
  }
  // sum_{k>=K} [f(2k+a) - f(2k+1+a)] ~ f(x)/2 - f'(x)/4 at x = 2K+a, f = x^{-2}
  const double x = 2.0 * pairs + a;
  s += 0.5 / (x * x) + 0.5 / (x * x * x);
  CHECK(close(alt_hurwitz_zeta(2, a), s.value(), 1e-10));
  CHECK_THROWS_AS(alt_hurwitz_zeta(2, -1.0), PoleError);
}

TEST_CASE("shift parameter guard") {
  CHECK(ShiftParam(0.3).value() == 0.3);
  CHECK_NOTHROW(ShiftParam(0.5005));
  CHECK_THROWS_AS(ShiftParam(2.0), DomainError);
  CHECK_THROWS_AS(ShiftParam(1.0005), DomainError);
  CHECK_NOTHROW(ShiftParam(1.0005, 1e-4));
  CHECK(integer_distance(-2.3) == doctest::Approx(0.3));
}
