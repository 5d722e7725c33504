// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/harmonic.hpp"
#include "eulersum/identities.hpp"
#include "eulersum/laurent.hpp"
#include "eulersum/series_eval.hpp"
#include "eulersum/special_fn.hpp"

using namespace eulersum;

namespace {

// pinned tolerances
constexpr double tol_anchor_square = 1e-14;
constexpr double tol_zeta21 = 1e-9;
constexpr double tol_linear = 1e-8;
constexpr double tol_diff = 1e-7;
constexpr double tol_fd = 1e-4;
constexpr double tol_coherence = 1e-9;
constexpr double tol_general = 1e-7;
constexpr double tol_csc = 1e-10;
constexpr double tol_double_zeta = 1e-8;
constexpr double tol_double_zeta_anchor = 1e-10;
constexpr double tol_quadratic = 1e-6;
constexpr double tol_recurrence = 1e-12;

// runtime limits in seconds
constexpr double limit_ac1 = 1.0;
constexpr double limit_ac2 = 5.0;
constexpr double limit_ac3 = 5.0;
constexpr double limit_ac7 = 10.0;
constexpr double limit_ac8 = 60.0;

const double zeta3 = 1.2020569031595942853997381615;

using Pair = std::pair<double, double>;
const std::vector<Pair> pair_grid = {{0.3, 0.7}, {0.3, -0.3}, {1.4, 2.6}, {-0.6, 0.4}, {0.25, 1.75}};
const std::vector<double> a_grid = {0.3, 0.25, 1.4, -0.6};

struct Outcome {
  bool ok = true;
  int checks = 0;
  double worst = 0.0;  // largest observed error / residual
  std::string note;

  void expect(bool condition, double error, const std::string& what) {
    ++checks;
    if (std::isfinite(error)) worst = std::max(worst, error);
    if (!condition) {
      ok = false;
      if (note.size() < 400) note += " [" + what + "]";
    }
  }
  void residual(const IdentityReport& r, double tol) {
    std::string what = r.identity_id;
    for (const auto& [name, value] : r.params) what += " " + name + "=" + std::to_string(value);
    expect(r.residual < tol, r.residual, what);
  }
};

bool run_criterion(const char* id, const char* title, double time_limit,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note += std::string(" [exception: ") + e.what() + "]";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0.0 && seconds >= time_limit) {
    out.ok = false;
    out.note += " [runtime over " + std::to_string(time_limit) + " s]";
  }
  std::printf("%s %s  %s: %d checks, worst %.3g, %.2f s%s\n", id, out.ok ? "PASS" : "FAIL", title,
              out.checks, out.worst, seconds, out.note.c_str());
  return out.ok;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double kernel_value(KernelKind kind, double z) {
  if (kind.type == KernelKind::Type::cot) return pi_cot(z);
  if (kind.type == KernelKind::Type::csc) return pi_csc(z);
  if (kind.p == 1) return digamma(-z) + euler_gamma;
  return polygamma(kind.p - 1, -z) / factorial(kind.p - 1);
}

void ac1(Outcome& out) {
  const double z2 = riemann_zeta(2);
  const double anchor = std::abs(z2 * z2 - 2.5 * riemann_zeta(4));
  out.expect(anchor < tol_anchor_square, anchor, "zeta(2)^2 = 5/2 zeta(4)");
  EulerSumSpec spec;
  spec.harmonic_orders = {1};
  spec.shifts = {{0.0, 2}};
  spec.direction = Direction::backward;
  spec.classical = true;
  const double err = std::abs(euler_sum(spec, EvalConfig{}).value - zeta3);
  out.expect(err < tol_zeta21, err, "zeta(2,1) = zeta(3)");
}

void ac2(Outcome& out) {
  const EvalConfig cfg;
  for (int p = 1; p <= 4; ++p) {
    for (auto [a, b] : pair_grid) out.residual(verify_linear_pair(p, a, b, cfg), tol_linear);
  }
}

void ac3(Outcome& out) {
  const EvalConfig cfg;
  for (int m = 0; m <= 2; ++m) {
    for (double a : a_grid) {
      out.residual(verify_linear_symmetric(m, a, cfg), tol_linear);
      out.residual(verify_linear_reflect(m, a, cfg), tol_linear);
    }
  }
}

void ac4(Outcome& out) {
  const EvalConfig cfg;
  for (auto [a, b] : {Pair{0.3, 0.7}, Pair{1.4, 2.6}, Pair{-0.6, 0.4}, Pair{0.25, 1.75}}) {
    out.residual(verify_diff_pair(a, b, cfg), tol_diff);
  }
  for (double a : a_grid) out.residual(verify_diff_reflect(a, cfg), tol_diff);
  const double a = 0.3;
  const double b = 0.7;
  const double h = 1e-4;
  const double mixed = (linear_pair_rhs(1, a + h, b + h) - linear_pair_rhs(1, a + h, b - h) -
                        linear_pair_rhs(1, a - h, b + h) + linear_pair_rhs(1, a - h, b - h)) /
                       (4.0 * h * h);
  const double err = std::abs(diff_pair_rhs(a, b) - mixed);
  out.expect(err < tol_fd, err, "finite-difference mixed derivative");
}

void ac5(Outcome& out) {
  const EvalConfig cfg;
  for (int p = 1; p <= 3; ++p) {
    for (auto [a, b] : pair_grid) {
      const auto general = verify_general_rational(p, RationalFunction::linear_pair(a, b), cfg);
      const double gap = std::abs(general.lhs - verify_linear_pair(p, a, b, cfg).lhs);
      out.expect(gap < tol_coherence, gap, "general vs pair p=" + std::to_string(p));
    }
  }
  out.residual(verify_general_rational(2, RationalFunction::from_poles({{-0.5, 2, 1.0}}), cfg),
               tol_general);
  out.residual(verify_general_rational(
                   1, RationalFunction::from_poles({{-0.3, 1, 1.0}, {-0.7, 1, -2.5}, {-1.9, 1, 1.5}}),
                   cfg),
               tol_general);
}

void ac6(Outcome& out) {
  const EvalConfig cfg;
  for (int p = 1; p <= 4; ++p) {
    for (auto [a, b] : pair_grid) out.residual(verify_alt_linear_pair(p, a, b, cfg), tol_linear);
  }
  for (double a : a_grid) {
    for (int m = 0; m <= 2; ++m) {
      out.residual(verify_alt_symmetric(m, a, cfg), tol_linear);
      if (m >= 1) out.residual(verify_alt_reflect(m, a, cfg), tol_linear);
    }
  }
  for (int p = 1; p <= 3; ++p) {
    for (auto [a, b] : pair_grid) {
      out.residual(verify_alt_general_rational(p, RationalFunction::linear_pair(a, b), cfg), tol_general);
    }
  }
  out.residual(verify_alt_general_rational(1, RationalFunction::from_poles({{-0.5, 2, 1.0}}), cfg),
               tol_general);
  out.residual(verify_alt_general_rational(
                   3, RationalFunction::from_poles({{-0.25, 1, 1.3}, {-1.75, 1, -1.3}}), cfg),
               tol_general);
  for (auto [a, b] : pair_grid) out.residual(verify_csc_lemma(a, b, cfg), tol_csc);
}

void ac7(Outcome& out) {
  const EvalConfig cfg;
  for (int j = 1; j <= 5; ++j) {
    for (int m = 0; j + m <= 5; ++m) {
      const double gap = std::abs(alt_double_zeta_closed(j, m) - alt_double_zeta_direct(j, m, cfg).value);
      out.expect(gap < tol_double_zeta, gap, "j=" + std::to_string(j) + " m=" + std::to_string(m));
    }
  }
  const double anchor = std::abs(alt_double_zeta_direct(1, 0, cfg).value - zeta3 / 8.0);
  out.expect(anchor < tol_double_zeta_anchor, anchor, "zeta(2bar,1) = zeta(3)/8");
}

void ac8(Outcome& out) {
  const EvalConfig cfg;
  std::vector<QuadraticPoint> points;
  for (auto [p, m] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    for (auto [a, b] : {Pair{0.3, 0.7}, Pair{1.4, 2.6}, Pair{-0.6, 0.4}}) points.push_back({p, m, a, b});
  }
  const auto adj = adjudicate_quadratic(points, cfg);
  out.expect(adj.every_point_has_pass, 0.0, "a passing variant at every point");
  out.expect(adj.consistent.has_value(), 0.0, "a consistent minimizing variant");
  if (adj.consistent) {
    for (const auto& row : adj.rows) out.residual(row.reports[*adj.consistent], tol_quadratic);
    out.note += " consistent=" + adj.variants[*adj.consistent].name();
  }
  for (auto [a, b] : {Pair{0.3, 0.7}, Pair{1.4, 2.6}, Pair{-0.6, 0.4}}) {
    out.residual(verify_quadratic_11(a, b, cfg), tol_quadratic);
    out.residual(verify_quadratic_22(a, b, cfg), tol_quadratic);
  }
}

void ac9(Outcome& out) {
  // Hurwitz and alternating recurrences
  for (int s = 2; s <= 6; ++s) {
    for (int i = 1; i <= 60; ++i) {
      const double a = 0.05 * i;
      if (integer_distance(a) < 1e-9) continue;
      const double lhs = hurwitz_zeta(s, a);
      const double rel = std::abs(lhs - hurwitz_zeta(s, a + 1.0) - std::pow(a, -s)) / std::abs(lhs);
      out.expect(rel < tol_recurrence, rel, "Hurwitz recurrence");
      const double alt = alt_hurwitz_zeta(s, a) + alt_hurwitz_zeta(s, a + 1.0);
      const double arel = std::abs(alt - std::pow(a, -s)) / std::pow(a, -s);
      out.expect(arel < tol_recurrence, arel, "alternating split");
    }
  }
  // polygamma relation holds exactly
  for (int j = 1; j <= 6; ++j) {
    for (double a : {0.3, 1.4, -0.6, 2.6}) {
      const double rhs = ((j % 2 == 1) ? 1.0 : -1.0) * factorial(j) * hurwitz_zeta(j + 1, a);
      out.expect(polygamma(j, a) == rhs, std::abs(polygamma(j, a) - rhs), "polygamma relation");
    }
  }
  // Laurent expansions at integers against direct evaluation
  const int K = 7;
  for (auto kind : {KernelKind::cot(), KernelKind::csc(), KernelKind::psi(1), KernelKind::psi(2),
                    KernelKind::psi(3)}) {
    for (long n : {-2L, 0L, 1L, 3L}) {
      const auto s = expand_at_integer(kind, n, K);
      const auto wider = expand_at_integer(kind, n, K + 2);
      for (double h : {1e-2, 5e-3}) {
        const double z = static_cast<double>(n) + h;
        const double value = kernel_value(kind, z);
        double bound = 0.0;
        for (int k = K + 1; k <= K + 2; ++k) bound += std::abs(wider.coefficient(k)) * std::pow(h, k);
        const double err = std::abs(s.evaluate(z) - value);
        out.expect(err <= 2.0 * bound + 1e-12 * std::abs(value), err, "expansion " + kind.name());
      }
    }
  }
  // series products against polynomial products
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(9);
    std::vector<double> y(9);
    for (auto& c : x) c = coeff(rng);
    for (auto& c : y) c = coeff(rng);
    const auto product = FormalLaurentSeries::taylor(0.0, x) * FormalLaurentSeries::taylor(0.0, y);
    for (int k = 0; k <= product.valid_order(); ++k) {
      double expected = 0.0;
      for (int i = 0; i <= k; ++i) expected += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
      const double err = std::abs(product.coefficient(k) - expected);
      out.expect(err <= 1e-13 * (1.0 + std::abs(expected)), err, "series product");
    }
  }
  // diagnostics honesty on the oracle-backed examples
  const EvalConfig cfg;
  auto honest = [&](const SeriesValue& v, double oracle, const char* what) {
    const double err = std::abs(v.value - oracle);
    out.expect(err <= v.diagnostics.tail_estimate, err, what);
  };
  EulerSumSpec pair;
  pair.shifts = {{0.3, 1}, {0.7, 1}};
  honest(euler_sum(pair, cfg), (digamma(1.7) - digamma(1.3)) / 0.4, "pair sum");
  EulerSumSpec z21;
  z21.harmonic_orders = {1};
  z21.shifts = {{0.0, 2}};
  z21.direction = Direction::backward;
  z21.classical = true;
  honest(euler_sum(z21, cfg), zeta3, "zeta(2,1)");
  EulerSumSpec alt;
  alt.sigma = -1;
  alt.harmonic_orders = {1};
  alt.shifts = {{0.0, 2}};
  alt.classical = true;
  honest(euler_sum(alt, cfg), -0.625 * zeta3, "alternating H_n/n^2");
  honest(alt_double_zeta_direct(1, 0, cfg), zeta3 / 8.0, "double zeta (1,0)");
  honest(weighted_harmonic_sum(1, RationalFunction::from_poles({{-0.5, 2, 1.0}}), 1, cfg).forward,
         1.57330985826004345295068797663, "H_n/(n+1/2)^2");
  for (double a : a_grid) {
    const auto r = RationalFunction::from_poles({{-a, 1, 1.0}, {-a - 1.0, 1, -1.0}});
    honest(rational_sum(r, 1, 1, cfg), 1.0 / (1.0 + a), "telescoping");
  }
  EvalConfig raw = cfg;
  raw.acceleration = Acceleration::raw;
  raw.base_terms = 1000;
  honest(euler_sum(pair, raw), (digamma(1.7) - digamma(1.3)) / 0.4, "raw pair sum");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion("AC1", "classical anchors", limit_ac1, ac1);
  ok &= run_criterion("AC2", "linear pair theorem", limit_ac2, ac2);
  ok &= run_criterion("AC3", "b=-a and b=1-a corollaries", limit_ac3, ac3);
  ok &= run_criterion("AC4", "differentiated identities", 0.0, ac4);
  ok &= run_criterion("AC5", "general rational theorem", 0.0, ac5);
  ok &= run_criterion("AC6", "alternating theorems and csc lemma", 0.0, ac6);
  ok &= run_criterion("AC7", "alternating double zeta", limit_ac7, ac7);
  ok &= run_criterion("AC8", "quadratic theorem adjudication", limit_ac8, ac8);
  ok &= run_criterion("AC9", "property suites", 0.0, ac9);
  return ok ? 0 : 1;
}
