#include "eulersum/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "eulersum/errors.hpp"
#include "eulersum/laurent.hpp"
#include "report_builder.hpp"

namespace eulersum {

namespace {

using detail::ReportBuilder;

const std::vector<std::string_view> ids = {
    "linear_pair",     "linear_symmetric",   "linear_reflect", "diff_pair",
    "diff_reflect",    "general_rational",   "alt_linear_pair", "alt_symmetric",
    "alt_reflect",     "alt_general_rational", "alt_double_zeta", "quadratic",
    "quadratic_11",    "quadratic_22",       "csc_lemma",
};

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

double factorial(int n) { return std::tgamma(n + 1.0); }

std::string number(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

void check_pair(double a, double b, const EvalConfig& cfg) {
  (void)ShiftParam(a, cfg.guard);
  (void)ShiftParam(b, cfg.guard);
  if (std::abs(a - b) < cfg.guard) {
    throw DomainError("a and b must differ by at least the guard");
  }
}

void check_not_half(double a, const EvalConfig& cfg) {
  (void)ShiftParam(a, cfg.guard);
  if (std::abs(a - 0.5) < cfg.guard) {
    throw DomainError("a must stay the guard away from 1/2");
  }
}

void check_order(int value, int lowest, const char* name) {
  if (value < lowest) {
    throw DomainError(std::string(name) + " must be >= " + std::to_string(lowest));
  }
}

// sum_{n>=1} H_n^{(p...)} sigma^n / ((n+a)(n+b)) or the backward companion.
SeriesValue pair_sum(std::vector<int> orders, double a, double b, int sigma, Direction direction,
                     const EvalConfig& cfg) {
  EulerSumSpec spec;
  spec.sigma = sigma;
  spec.harmonic_orders = std::move(orders);
  spec.shifts = {{a, 1}, {b, 1}};
  spec.direction = direction;
  return euler_sum(spec, cfg);
}

// sum_{n>=1} sigma^n / (n^q (n^2 - a^2))
SeriesValue odd_power_sum(int q, double a, int sigma, const EvalConfig& cfg) {
  EulerSumSpec spec;
  spec.sigma = sigma;
  spec.shifts = {{0.0, q}, {a, 1}, {-a, 1}};
  spec.classical = true;
  return euler_sum(spec, cfg);
}

double zc(int k) { return zeta_conventional(k); }
double azc(int k) { return alt_zeta_conventional(k); }
double hzc(int s, double a) { return hurwitz_zeta_conventional(s, a); }

// zeta(s;a) -/+ zeta(s;-a) with the a^{-s} poles split off, so they cancel exactly for small a
double hzc_minus_reflected(int s, double a) {
  return (std::pow(a, -s) - std::pow(-a, -s)) + (hzc(s, 1.0 + a) - hzc(s, 1.0 - a));
}
double hzc_plus_reflected(int s, double a) {
  return (std::pow(a, -s) + std::pow(-a, -s)) + (hzc(s, 1.0 + a) + hzc(s, 1.0 - a));
}
// alternating zeta(s;-a) - zeta(s;a), same splitting
double ahz_reflected_minus(int s, double a) {
  return (std::pow(-a, -s) - std::pow(a, -s)) +
         (alt_hurwitz_zeta(s, 1.0 + a) - alt_hurwitz_zeta(s, 1.0 - a));
}

std::vector<std::pair<std::string, double>> rational_params(int p, const RationalFunction& r) {
  std::vector<std::pair<std::string, double>> params = {{"p", p}};
  int index = 1;
  for (const auto& term : r.terms()) {
    const std::string suffix = std::to_string(index++);
    params.emplace_back("pole" + suffix, term.pole);
    params.emplace_back("mult" + suffix, term.multiplicity);
    params.emplace_back("coeff" + suffix, term.coeff);
  }
  return params;
}

// Sum of Res(kernel * r, beta) over the poles of r.
double kernel_residues(ReportBuilder& builder, KernelKind trig, int p, const RationalFunction& r,
                       double coeff, const EvalConfig& cfg) {
  double total = 0.0;
  for (double beta : r.poles()) {
    const int K = r.multiplicity_at(beta) + 1;
    const std::array<FormalLaurentSeries, 2> factors = {
        expand_at_point(trig, beta, K, cfg.guard),
        expand_at_point(KernelKind::psi(p), beta, K, cfg.guard)};
    const double res = residue_of_product(factors, r.local_series(beta, K));
    builder.rhs("Res at " + number(beta), coeff * res);
    total += res;
  }
  return total;
}

}  // namespace

const std::vector<std::string_view>& identity_ids() { return ids; }

bool is_identity_id(std::string_view id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

double default_tolerance(std::string_view id) {
  if (id == "diff_pair" || id == "diff_reflect" || id == "general_rational" ||
      id == "alt_general_rational") {
    return 1e-7;
  }
  if (id == "quadratic" || id == "quadratic_11" || id == "quadratic_22") {
    return 1e-6;
  }
  if (id == "csc_lemma") {
    return 1e-10;
  }
  return 1e-8;
}

double linear_pair_rhs(int p, double a, double b) {
  check_order(p, 1, "p");
  const double s = sign(p) / (b - a);
  KahanSum sum;
  for (int k = 0; k <= p / 2; ++k) {
    sum += 2.0 * s * zc(2 * k) * (hzc(p - 2 * k + 1, a) - hzc(p - 2 * k + 1, b));
  }
  sum += s * (pi_cot(a) * (hzc(p, a) - zc(p)) - pi_cot(b) * (hzc(p, b) - zc(p)));
  return sum.value();
}

IdentityReport verify_linear_pair(int p, double a, double b, const EvalConfig& cfg) {
  check_order(p, 1, "p");
  check_pair(a, b, cfg);
  ReportBuilder out("linear_pair", {{"p", p}, {"a", a}, {"b", b}});
  out.lhs("sum H_n^(p)/((n+a)(n+b))", 1.0, pair_sum({p}, a, b, 1, Direction::forward, cfg));
  out.lhs("-(-1)^p sum H_{n-1}^(p)/((n-a)(n-b))", -sign(p),
          pair_sum({p}, a, b, 1, Direction::backward, cfg));
  const double s = sign(p) / (b - a);
  for (int k = 0; k <= p / 2; ++k) {
    out.rhs("zeta(" + std::to_string(2 * k) + ") group",
            2.0 * s * zc(2 * k) * (hzc(p - 2 * k + 1, a) - hzc(p - 2 * k + 1, b)));
  }
  out.rhs("pi cot(pi a) group", s * pi_cot(a) * (hzc(p, a) - zc(p)));
  out.rhs("pi cot(pi b) group", -s * pi_cot(b) * (hzc(p, b) - zc(p)));
  return out.finish(cfg);
}

IdentityReport verify_linear_symmetric(int m, double a, const EvalConfig& cfg) {
  check_order(m, 0, "m");
  (void)ShiftParam(a, cfg.guard);
  const int q = 2 * m + 1;
  ReportBuilder out("linear_symmetric", {{"m", m}, {"a", a}});
  out.lhs("sum H_n^(2m+1)/(n^2-a^2)", 1.0, pair_sum({q}, a, -a, 1, Direction::forward, cfg));
  out.rhs("(1/2) sum 1/(n^(2m+1)(n^2-a^2))", 0.5, odd_power_sum(q, a, 1, cfg));
  for (int k = 0; k <= m; ++k) {
    const int s = 2 * m - 2 * k + 2;
    out.rhs("zeta(" + std::to_string(2 * k) + ") group",
            zc(2 * k) * hzc_minus_reflected(s, a) / (2.0 * a));
  }
  out.rhs("pi cot(pi a) group",
          pi_cot(a) * (hzc_plus_reflected(q, a) - 2.0 * zc(q)) / (4.0 * a));
  return out.finish(cfg);
}

IdentityReport verify_linear_reflect(int m, double a, const EvalConfig& cfg) {
  check_order(m, 0, "m");
  check_not_half(a, cfg);
  const int q = 2 * m + 1;
  const double b = 1.0 - a;
  ReportBuilder out("linear_reflect", {{"m", m}, {"a", a}});
  out.lhs("sum H_n^(2m+1)/((n+a)(n+1-a))", 1.0, pair_sum({q}, a, b, 1, Direction::forward, cfg));
  for (int k = 0; k <= m; ++k) {
    const int s = 2 * m - 2 * k + 2;
    out.rhs("zeta(" + std::to_string(2 * k) + ") group",
            zc(2 * k) * (hzc(s, a) - hzc(s, b)) / (2.0 * a - 1.0));
  }
  out.rhs("pi cot(pi a) group",
          pi_cot(a) * (hzc(q, a) + hzc(q, b) - 2.0 * zc(q)) / (2.0 * (2.0 * a - 1.0)));
  return out.finish(cfg);
}

double diff_pair_rhs(double a, double b) {
  const double d = a - b;
  const double psi_a = digamma(a) + euler_gamma;
  const double psi_b = digamma(b) + euler_gamma;
  const double csc2_a = pi_csc(a) * pi_csc(a);
  const double csc2_b = pi_csc(b) * pi_csc(b);
  KahanSum sum;
  sum += -2.0 *
         (-polygamma(1, a) - pi_cot(a) * psi_a + polygamma(1, b) + pi_cot(b) * psi_b) /
         (d * d * d);
  sum += -(polygamma(2, a) + pi_cot(a) * polygamma(1, a) - csc2_a * psi_a) / (d * d);
  sum += -(polygamma(2, b) + pi_cot(b) * polygamma(1, b) - csc2_b * psi_b) / (d * d);
  return sum.value();
}

IdentityReport verify_diff_pair(double a, double b, const EvalConfig& cfg) {
  check_pair(a, b, cfg);
  ReportBuilder out("diff_pair", {{"a", a}, {"b", b}});
  EulerSumSpec spec;
  spec.harmonic_orders = {1};
  spec.shifts = {{a, 2}, {b, 2}};
  out.lhs("sum H_n/((n+a)^2(n+b)^2)", 1.0, euler_sum(spec, cfg));
  spec.direction = Direction::backward;
  out.lhs("sum H_{n-1}/((n-a)^2(n-b)^2)", 1.0, euler_sum(spec, cfg));
  out.rhs("closed form", diff_pair_rhs(a, b));
  return out.finish(cfg);
}

IdentityReport verify_diff_reflect(double a, const EvalConfig& cfg) {
  check_not_half(a, cfg);
  const double b = 1.0 - a;
  ReportBuilder out("diff_reflect", {{"a", a}});
  EulerSumSpec spec;
  spec.harmonic_orders = {1};
  spec.shifts = {{a, 2}, {b, 2}};
  out.lhs("sum H_n/((n+a)^2(n+1-a)^2)", 1.0, euler_sum(spec, cfg));

  const double c = 2.0 * a - 1.0;
  const double cot = pi_cot(a);
  const double csc2 = pi_csc(a) * pi_csc(a);
  const double psi_a = digamma(a) + euler_gamma;
  const double psi_b = digamma(b) + euler_gamma;
  out.rhs("1/(2a-1)^3 group",
          (-polygamma(1, b) + polygamma(1, a) + cot * psi_b + cot * psi_a) / (c * c * c));
  out.rhs("1-a group", -(polygamma(2, b) - cot * polygamma(1, b) - csc2 * psi_b) / (2.0 * c * c));
  out.rhs("a group", -(polygamma(2, a) + cot * polygamma(1, a) - csc2 * psi_a) / (2.0 * c * c));
  return out.finish(cfg);
}

IdentityReport verify_general_rational(int p, const RationalFunction& r, const EvalConfig& cfg) {
  check_order(p, 1, "p");
  ReportBuilder out("general_rational", rational_params(p, r));
  const auto harmonic = weighted_harmonic_sum(p, r, 1, cfg);
  out.lhs("sum_{n>=0} H_n^(p) r(n)", 1.0, harmonic.forward);
  out.lhs("-(-1)^p sum_{n>=1} H_{n-1}^(p) r(-n)", -sign(p), harmonic.backward);

  const double zeta_p = zc(p);
  if (zeta_p != 0.0) {
    out.rhs("-(-1)^p zeta(p) sum_{n>=0} r(n)", -sign(p) * zeta_p, rational_sum(r, 1, 0, cfg));
    out.rhs("-(-1)^p zeta(p) sum_{n>=1} r(-n)", -sign(p) * zeta_p,
            rational_sum(r.reflected(), 1, 1, cfg));
  }
  for (int k = 0; k <= p / 2; ++k) {
    const int order = p - 2 * k;
    const auto& derived = order == 0 ? r : r.derivative(order);
    out.rhs("2 zeta(" + std::to_string(2 * k) + ") sum r^(" + std::to_string(order) + ")(n)",
            2.0 * zc(2 * k) / factorial(order), rational_sum(derived, 1, 0, cfg));
  }
  kernel_residues(out, KernelKind::cot(), p, r, -1.0, cfg);
  return out.finish(cfg);
}

IdentityReport verify_alt_linear_pair(int p, double a, double b, const EvalConfig& cfg) {
  check_order(p, 1, "p");
  check_pair(a, b, cfg);
  ReportBuilder out("alt_linear_pair", {{"p", p}, {"a", a}, {"b", b}});
  out.lhs("sum (-1)^n H_n^(p)/((n+a)(n+b))", 1.0,
          pair_sum({p}, a, b, -1, Direction::forward, cfg));
  out.lhs("-(-1)^p sum (-1)^n H_{n-1}^(p)/((n-a)(n-b))", -sign(p),
          pair_sum({p}, a, b, -1, Direction::backward, cfg));
  const double s = sign(p) / (b - a);
  for (int k = 0; k <= p / 2; ++k) {
    const int q = p - 2 * k + 1;
    out.rhs("alt zeta(" + std::to_string(2 * k) + ") group",
            2.0 * s * azc(2 * k) * (alt_hurwitz_zeta(q, b) - alt_hurwitz_zeta(q, a)));
  }
  out.rhs("pi/sin(pi a) group", s * pi_csc(a) * (hzc(p, a) - zc(p)));
  out.rhs("pi/sin(pi b) group", -s * pi_csc(b) * (hzc(p, b) - zc(p)));
  return out.finish(cfg);
}

IdentityReport verify_alt_symmetric(int m, double a, const EvalConfig& cfg) {
  check_order(m, 0, "m");
  (void)ShiftParam(a, cfg.guard);
  const int q = 2 * m + 1;
  ReportBuilder out("alt_symmetric", {{"m", m}, {"a", a}});
  out.lhs("sum (-1)^n H_n^(2m+1)/(n^2-a^2)", 1.0,
          pair_sum({q}, a, -a, -1, Direction::forward, cfg));
  out.rhs("(1/2) sum (-1)^n/(n^(2m+1)(n^2-a^2))", 0.5, odd_power_sum(q, a, -1, cfg));
  for (int k = 0; k <= m; ++k) {
    const int s = 2 * m - 2 * k + 2;
    out.rhs("alt zeta(" + std::to_string(2 * k) + ") group",
            azc(2 * k) * ahz_reflected_minus(s, a) / (2.0 * a));
  }
  out.rhs("pi/sin(pi a) group",
          pi_csc(a) * (hzc_plus_reflected(q, a) - 2.0 * zc(q)) / (4.0 * a));
  return out.finish(cfg);
}

IdentityReport verify_alt_reflect(int m, double a, const EvalConfig& cfg) {
  check_order(m, 1, "m");
  check_not_half(a, cfg);
  const int q = 2 * m;
  const double b = 1.0 - a;
  ReportBuilder out("alt_reflect", {{"m", m}, {"a", a}});
  out.lhs("sum (-1)^n H_n^(2m)/((n+a)(n+1-a))", 1.0,
          pair_sum({q}, a, b, -1, Direction::forward, cfg));
  for (int k = 0; k <= m; ++k) {
    const int s = 2 * m - 2 * k + 1;
    out.rhs("alt zeta(" + std::to_string(2 * k) + ") group",
            azc(2 * k) * (alt_hurwitz_zeta(s, b) - alt_hurwitz_zeta(s, a)) / (1.0 - 2.0 * a));
  }
  out.rhs("pi/sin(pi a) group",
          pi_csc(a) * (hzc(q, a) - hzc(q, b)) / (2.0 * (1.0 - 2.0 * a)));
  return out.finish(cfg);
}

IdentityReport verify_alt_general_rational(int p, const RationalFunction& r,
                                           const EvalConfig& cfg) {
  check_order(p, 1, "p");
  ReportBuilder out("alt_general_rational", rational_params(p, r));
  const auto harmonic = weighted_harmonic_sum(p, r, -1, cfg);
  out.lhs("sum_{n>=0} (-1)^n H_n^(p) r(n)", 1.0, harmonic.forward);
  out.lhs("-(-1)^p sum_{n>=1} (-1)^n H_{n-1}^(p) r(-n)", -sign(p), harmonic.backward);

  const double zeta_p = zc(p);
  if (zeta_p != 0.0) {
    out.rhs("-(-1)^p zeta(p) sum_{n>=0} (-1)^n r(n)", -sign(p) * zeta_p,
            rational_sum(r, -1, 0, cfg));
    out.rhs("-(-1)^p zeta(p) sum_{n>=1} (-1)^n r(-n)", -sign(p) * zeta_p,
            rational_sum(r.reflected(), -1, 1, cfg));
  }
  for (int k = 0; k <= p / 2; ++k) {
    const int order = p - 2 * k;
    const auto& derived = order == 0 ? r : r.derivative(order);
    out.rhs("-2 alt zeta(" + std::to_string(2 * k) + ") sum (-1)^n r^(" +
                std::to_string(order) + ")(n)",
            -2.0 * azc(2 * k) / factorial(order), rational_sum(derived, -1, 0, cfg));
  }
  kernel_residues(out, KernelKind::csc(), p, r, -1.0, cfg);
  return out.finish(cfg);
}

IdentityReport verify_csc_lemma(double a, double b, const EvalConfig& cfg) {
  check_pair(a, b, cfg);
  const auto r = RationalFunction::linear_pair(a, b, cfg.guard);
  ReportBuilder out("csc_lemma", {{"a", a}, {"b", b}});
  out.lhs("sum_{n>=0} (-1)^n/((n+a)(n+b))", 1.0, rational_sum(r, -1, 0, cfg));
  out.lhs("sum_{n>=1} (-1)^n/((n-a)(n-b))", 1.0, rational_sum(r.reflected(), -1, 1, cfg));
  out.rhs("pi/(b-a) (csc(pi a) - csc(pi b))", (pi_csc(a) - pi_csc(b)) / (b - a));
  return out.finish(cfg);
}

double alt_double_zeta_closed(int j, int m) {
  if (j < 1 || m < 0) {
    throw DomainError("alt_double_zeta_closed needs j >= 1, m >= 0");
  }
  const int w = 2 * m + 2 * j + 1;
  KahanSum sum;
  sum += 0.5 * alt_zeta(w);
  for (int k = 0; k <= m; ++k) {
    sum -= binomial(2 * j + 2 * m - 2 * k, 2 * j - 1) * azc(2 * k) * alt_zeta(w - 2 * k);
  }
  for (int l = 0; l <= j - 1; ++l) {
    sum += binomial(2 * j + 2 * m - 2 * l, 2 * m) * azc(2 * l) * riemann_zeta(w - 2 * l);
  }
  return sum.value();
}

IdentityReport verify_alt_double_zeta(int j, int m, const EvalConfig& cfg) {
  ReportBuilder out("alt_double_zeta", {{"j", j}, {"m", m}});
  out.lhs("sum (-1)^n H_{n-1}^(2m+1)/n^(2j)", 1.0, alt_double_zeta_direct(j, m, cfg));
  out.rhs("closed form", alt_double_zeta_closed(j, m));
  return out.finish(cfg);
}

}  // namespace eulersum
