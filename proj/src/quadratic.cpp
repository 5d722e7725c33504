#include <algorithm>
#include <cmath>
#include <limits>

#include "eulersum/errors.hpp"
#include "eulersum/identities.hpp"
#include "report_builder.hpp"

namespace eulersum {

namespace {

using detail::ReportBuilder;

double sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

double binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

double zc(int k) { return zeta_conventional(k); }
double hzc(int s, double a) { return hurwitz_zeta_conventional(s, a); }

void check_pair(double a, double b, const EvalConfig& cfg) {
  (void)ShiftParam(a, cfg.guard);
  (void)ShiftParam(b, cfg.guard);
  if (std::abs(a - b) < cfg.guard) {
    throw DomainError("a and b must differ by at least the guard");
  }
}

SeriesValue pair_sum(std::vector<int> orders, double a, double b, Direction direction,
                     const EvalConfig& cfg) {
  EulerSumSpec spec;
  spec.harmonic_orders = std::move(orders);
  spec.shifts = {{a, 1}, {b, 1}};
  spec.direction = direction;
  return euler_sum(spec, cfg);
}

// zeta(e;a) - zeta(e;b), including e = 0 where zeta(0;x) = 1/2 - x.
double hurwitz_difference(int e, double a, double b) {
  if (e == 0) {
    return b - a;
  }
  if (e < 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return hzc(e, a) - hzc(e, b);
}

// sum_{n>=0} H_n^{(q)} [(n+a)^{-e} - (n+b)^{-e}]
SeriesValue shifted_difference_sum(int q, int e, double a, double b, const EvalConfig& cfg) {
  if (e == 0) {
    return {};
  }
  if (e < 0) {
    return {std::numeric_limits<double>::quiet_NaN(), {}};
  }
  const auto r = RationalFunction::from_poles({{-a, e, 1.0}, {-b, e, -1.0}}, cfg.guard);
  return harmonic_rational_sum({q}, 0, r, 1, 1, cfg);
}

// One double-indexed group over 2 k1 + k2 <= bound, k2 >= 1, with P, M in the roles of p, m.
void double_indexed_group(ReportBuilder& out, const std::string& tag, int P, int M, int bound,
                          int k1_min, double a, double b, double outer, const EvalConfig& cfg) {
  for (int k1 = k1_min; 2 * k1 + 1 <= bound; ++k1) {
    for (int k2 = 1; 2 * k1 + k2 <= bound; ++k2) {
      const double weight = zc(2 * k1);
      if (weight == 0.0) {
        continue;
      }
      const int q = k2 + P - 1;
      const int e = M - 2 * k1 - k2 + 2;
      const double c = outer * sign(k2) * binomial(k2 + P - 2, P - 1) * weight;
      const std::string label =
          tag + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
      out.rhs(label + " zeta part", -c * zc(q) * hurwitz_difference(e, a, b));
      out.rhs(label + " series part", c * sign(P + k2),
              shifted_difference_sum(q, e, a, b, cfg));
    }
  }
}

}  // namespace

std::string_view to_string(QuadraticReading reading) {
  return reading == QuadraticReading::as_printed ? "as_printed" : "corrected";
}

std::string QuadraticVariant::name() const {
  return std::string(to_string(reading)) + "/k1>=" + std::to_string(k1_min) +
         (second_bound_p ? "/p+1" : "/m+1");
}

std::vector<QuadraticVariant> quadratic_variants() {
  std::vector<QuadraticVariant> out;
  for (auto reading : {QuadraticReading::as_printed, QuadraticReading::corrected}) {
    for (int k1 : {0, 1}) {
      for (bool bound_p : {true, false}) {
        out.push_back({reading, k1, bound_p});
      }
    }
  }
  return out;
}

std::optional<QuadraticVariant> parse_quadratic_variant(std::string_view name) {
  for (const auto& v : quadratic_variants()) {
    if (v.name() == name) {
      return v;
    }
  }
  if (name == "corrected") {
    return QuadraticVariant{QuadraticReading::corrected, 0, true};
  }
  if (name == "as_printed") {
    return QuadraticVariant{QuadraticReading::as_printed, 0, true};
  }
  return std::nullopt;
}

IdentityReport verify_quadratic(int p, int m, double a, double b, const QuadraticVariant& variant,
                                const EvalConfig& cfg) {
  if (p < 1 || m < 1) {
    throw DomainError("quadratic needs p, m >= 1");
  }
  if (variant.k1_min != 0 && variant.k1_min != 1) {
    throw DomainError("k1_min must be 0 or 1");
  }
  check_pair(a, b, cfg);
  ReportBuilder out("quadratic", {{"p", p}, {"m", m}, {"a", a}, {"b", b}});
  out.variant(variant.name());
  const double s = sign(p + m);
  const double inv = 1.0 / (b - a);

  out.lhs("sum H_n^(p) H_n^(m)/((n+a)(n+b))", 1.0, pair_sum({p, m}, a, b, Direction::forward, cfg));
  out.lhs("(-1)^(p+m) sum H_{n-1}^(p) H_{n-1}^(m)/((n-a)(n-b))", s,
          pair_sum({p, m}, a, b, Direction::backward, cfg));

  // Everything else moves to the right side with a minus sign.
  const double zeta_p = zc(p);
  const double zeta_m = zc(m);
  if (zeta_m != 0.0) {
    out.rhs("(-1)^m zeta(m) sum H_n^(p)/((n+a)(n+b))", -sign(m) * zeta_m,
            pair_sum({p}, a, b, Direction::forward, cfg));
    out.rhs("-(-1)^(p+m) zeta(m) sum H_{n-1}^(p)/((n-a)(n-b))", s * zeta_m,
            pair_sum({p}, a, b, Direction::backward, cfg));
  }
  if (zeta_p != 0.0) {
    out.rhs("(-1)^p zeta(p) sum H_n^(m)/((n+a)(n+b))", -sign(p) * zeta_p,
            pair_sum({m}, a, b, Direction::forward, cfg));
    out.rhs("-(-1)^(p+m) zeta(p) sum H_{n-1}^(m)/((n-a)(n-b))", s * zeta_p,
            pair_sum({m}, a, b, Direction::backward, cfg));
  }

  const double partner =
      variant.reading == QuadraticReading::corrected ? zeta_m : riemann_zeta_real(b);
  out.rhs("pi cot(pi b) group", -s * pi_cot(b) * inv * (hzc(p, b) * hzc(m, b) - zeta_p * zeta_m));
  out.rhs("pi cot(pi a) group", s * pi_cot(a) * inv * (hzc(p, a) * hzc(m, a) - zeta_p * partner));

  for (int k = 0; k <= (p + m) / 2; ++k) {
    const int e = p + m - 2 * k + 1;
    out.rhs("zeta(" + std::to_string(2 * k) + ") pair group",
            2.0 * s * inv * zc(2 * k) * (hzc(e, a) - hzc(e, b)));
  }

  const double outer = 2.0 * s * inv;
  double_indexed_group(out, "first", p, m, m + 1, variant.k1_min, a, b, outer, cfg);
  double_indexed_group(out, "second", m, p, variant.second_bound_p ? p + 1 : m + 1,
                       variant.k1_min, a, b, outer, cfg);
  return out.finish(cfg);
}

IdentityReport verify_quadratic_11(double a, double b, const EvalConfig& cfg) {
  check_pair(a, b, cfg);
  ReportBuilder out("quadratic_11", {{"a", a}, {"b", b}});
  const double inv = 1.0 / (b - a);
  const double psi_a = digamma(a) + euler_gamma;
  const double psi_b = digamma(b) + euler_gamma;
  const double z2 = riemann_zeta(2);

  out.lhs("sum H_n^2/((n+a)(n+b))", 1.0, pair_sum({1, 1}, a, b, Direction::forward, cfg));
  out.lhs("sum H_{n-1}^2/((n-a)(n-b))", 1.0, pair_sum({1, 1}, a, b, Direction::backward, cfg));

  out.rhs("pi cot(pi b) group", -pi_cot(b) * inv * psi_b * psi_b);
  out.rhs("pi cot(pi a) group", pi_cot(a) * inv * psi_a * psi_a);
  out.rhs("zeta(3;.) and zeta(2) group",
          2.0 * inv * (-(hzc(3, a) - hzc(3, b)) / 2.0 + z2 * (digamma(b) - digamma(a))));

  const auto r2 = RationalFunction::from_poles({{-a, 2, 1.0}, {-b, 2, -1.0}}, cfg.guard);
  out.rhs("sum H_n [(n+a)^-2 - (n+b)^-2]", 2.0 * inv,
          harmonic_rational_sum({1}, 0, r2, 1, 1, cfg));
  out.rhs("zeta(2)(psi(b)-psi(a))", 2.0 * inv * z2 * (digamma(b) - digamma(a)));
  out.rhs("sum H_n^(2)/((n+a)(n+b))", 2.0, pair_sum({2}, a, b, Direction::forward, cfg));
  return out.finish(cfg);
}

IdentityReport verify_quadratic_22(double a, double b, const EvalConfig& cfg) {
  check_pair(a, b, cfg);
  ReportBuilder out("quadratic_22", {{"a", a}, {"b", b}});
  const double inv = 1.0 / (b - a);
  const double z2 = riemann_zeta(2);
  const double z3 = riemann_zeta(3);
  const double z4 = riemann_zeta(4);
  const double dpsi = digamma(b) - digamma(a);
  const auto h2 = pair_sum({2}, a, b, Direction::forward, cfg);

  out.lhs("sum [H_n^(2)]^2/((n+a)(n+b))", 1.0, pair_sum({2, 2}, a, b, Direction::forward, cfg));
  out.lhs("sum [H_{n-1}^(2)]^2/((n-a)(n-b))", 1.0,
          pair_sum({2, 2}, a, b, Direction::backward, cfg));

  out.rhs("2 zeta(2) sum H_n^(2)/((n+a)(n+b))", -2.0 * z2, h2);
  out.rhs("-2 zeta(2) sum H_{n-1}^(2)/((n-a)(n-b))", 2.0 * z2,
          pair_sum({2}, a, b, Direction::backward, cfg));
  out.rhs("pi cot(pi b) group",
          -pi_cot(b) * inv * (hzc(2, b) * hzc(2, b) - z2 * z2));
  out.rhs("pi cot(pi a) group", pi_cot(a) * inv * (hzc(2, a) * hzc(2, a) - z2 * z2));
  out.rhs("zeta pair group", 2.0 * inv *
                                 (-(hzc(5, a) - hzc(5, b)) / 2.0 + z2 * (hzc(3, a) - hzc(3, b)) +
                                  z4 * dpsi));

  const auto r3 = RationalFunction::from_poles({{-a, 3, 1.0}, {-b, 3, -1.0}}, cfg.guard);
  const auto r2 = RationalFunction::from_poles({{-a, 2, 1.0}, {-b, 2, -1.0}}, cfg.guard);
  out.rhs("-zeta(2)[zeta(3;a)-zeta(3;b)]", 2.0 * inv * (-z2 * (hzc(3, a) - hzc(3, b))));
  out.rhs("sum H_n^(2)[(n+a)^-3 - (n+b)^-3]", -2.0 * inv,
          harmonic_rational_sum({2}, 0, r3, 1, 1, cfg));
  out.rhs("2 zeta(3)[zeta(2;a)-zeta(2;b)]", 2.0 * inv * 2.0 * z3 * (hzc(2, a) - hzc(2, b)));
  out.rhs("sum H_n^(3)[(n+a)^-2 - (n+b)^-2]", -4.0 * inv,
          harmonic_rational_sum({3}, 0, r2, 1, 1, cfg));
  out.rhs("-3 zeta(4)(psi(b)-psi(a))", 2.0 * inv * (-3.0 * z4 * dpsi));
  out.rhs("sum H_n^(4)/((n+a)(n+b))", -6.0, pair_sum({4}, a, b, Direction::forward, cfg));
  out.rhs("zeta(2)^2 (psi(b)-psi(a))", 4.0 * inv * z2 * z2 * dpsi);
  out.rhs("zeta(2) sum H_n^(2)/((n+a)(n+b))", 4.0 * z2, h2);
  return out.finish(cfg);
}

QuadraticAdjudication adjudicate_quadratic(const std::vector<QuadraticPoint>& points,
                                           const EvalConfig& cfg) {
  QuadraticAdjudication result;
  result.variants = quadratic_variants();
  const std::size_t count = result.variants.size();
  std::vector<bool> everywhere(count, true);
  result.every_point_has_pass = !points.empty();
  for (const auto& point : points) {
    QuadraticAdjudication::Row row;
    row.point = point;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& variant : result.variants) {
      row.reports.push_back(verify_quadratic(point.p, point.m, point.a, point.b, variant, cfg));
      best = std::min(best, row.reports.back().residual);
    }
    const double tolerance = row.reports.front().tolerance;
    // Variants that differ only in terms that vanish at this point tie up to rounding.
    const double cutoff = std::max(4.0 * best, 1e-3 * tolerance);
    bool any_pass = false;
    for (std::size_t i = 0; i < count; ++i) {
      const bool minimal = row.reports[i].residual <= cutoff;
      if (minimal) {
        row.minimizers.push_back(i);
      } else {
        everywhere[i] = false;
      }
      any_pass = any_pass || row.reports[i].passed;
    }
    result.every_point_has_pass = result.every_point_has_pass && any_pass;
    result.rows.push_back(std::move(row));
  }
  if (!points.empty()) {
    for (std::size_t i = 0; i < count; ++i) {
      if (everywhere[i]) {
        result.consistent = i;
        break;
      }
    }
  }
  return result;
}

}  // namespace eulersum
