#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/harmonic.hpp"
#include "json.hpp"

namespace eulersum::cli {

namespace {

using json = nlohmann::ordered_json;

struct IdentityInfo {
  std::string_view id;
  std::vector<std::string> params;
  std::string_view description;
};

const std::vector<IdentityInfo>& identity_table() {
  static const std::vector<IdentityInfo> table = {
      {"linear_pair", {"p", "a", "b"},
       "sum H_n^(p)/((n+a)(n+b)) - (-1)^p sum H_{n-1}^(p)/((n-a)(n-b))"},
      {"linear_symmetric", {"m", "a"}, "sum H_n^(2m+1)/(n^2-a^2)"},
      {"linear_reflect", {"m", "a"}, "sum H_n^(2m+1)/((n+a)(n+1-a))"},
      {"diff_pair", {"a", "b"}, "sum H_n/((n+a)^2(n+b)^2) + sum H_{n-1}/((n-a)^2(n-b)^2)"},
      {"diff_reflect", {"a"}, "sum H_n/((n+a)^2(n+1-a)^2)"},
      {"general_rational", {"p"}, "residue balance for pi cot(pi z) psi^(p-1)(-z) r(z)/(p-1)!"},
      {"alt_linear_pair", {"p", "a", "b"},
       "sum (-1)^n H_n^(p)/((n+a)(n+b)) - (-1)^p sum (-1)^n H_{n-1}^(p)/((n-a)(n-b))"},
      {"alt_symmetric", {"m", "a"}, "sum (-1)^n H_n^(2m+1)/(n^2-a^2)"},
      {"alt_reflect", {"m", "a"}, "sum (-1)^n H_n^(2m)/((n+a)(n+1-a)), m >= 1"},
      {"alt_general_rational", {"p"},
       "residue balance for pi psi^(p-1)(-z) r(z)/((p-1)! sin(pi z))"},
      {"alt_double_zeta", {"j", "m"}, "zeta(2j-bar, 2m+1) closed form vs direct sum"},
      {"quadratic", {"p", "m", "a", "b"},
       "sum H_n^(p) H_n^(m)/((n+a)(n+b)) balance (see --variant, --adjudicate)"},
      {"quadratic_11", {"a", "b"}, "sum H_n^2/((n+a)(n+b)) balance"},
      {"quadratic_22", {"a", "b"}, "sum [H_n^(2)]^2/((n+a)(n+b)) balance"},
      {"csc_lemma", {"a", "b"},
       "sum_{n>=0} (-1)^n/((n+a)(n+b)) + sum_{n>=1} (-1)^n/((n-a)(n-b))"},
  };
  return table;
}

const IdentityInfo& info(std::string_view id) {
  for (const auto& entry : identity_table()) {
    if (entry.id == id) {
      return entry;
    }
  }
  throw DomainError("unknown identity id '" + std::string(id) + "'");
}

bool is_integer_param(const std::string& name) {
  return name == "p" || name == "m" || name == "j" || name.rfind("mult", 0) == 0;
}

bool is_reflect(std::string_view id) {
  return id == "linear_reflect" || id == "diff_reflect" || id == "alt_reflect";
}

struct Point {
  int p = 1;
  int m = 0;
  int j = 1;
  double a = 0.0;
  double b = 0.0;
};

void set(Point& point, const std::string& name, double value) {
  if (is_integer_param(name)) {
    if (value != std::round(value)) {
      throw DomainError("--" + name + " needs integer values");
    }
    const int v = static_cast<int>(value);
    if (name == "p") point.p = v;
    if (name == "m") point.m = v;
    if (name == "j") point.j = v;
    return;
  }
  if (name == "a") point.a = value;
  if (name == "b") point.b = value;
}

struct Request {
  std::string id;
  std::optional<RationalFunction> rational;
  QuadraticVariant variant;
};

IdentityReport evaluate(const Request& req, const Point& pt, const EvalConfig& cfg) {
  const auto& id = req.id;
  auto need_rational = [&]() -> const RationalFunction& {
    if (!req.rational) {
      throw DomainError(id + " needs --rational");
    }
    return *req.rational;
  };
  if (id == "linear_pair") return verify_linear_pair(pt.p, pt.a, pt.b, cfg);
  if (id == "linear_symmetric") return verify_linear_symmetric(pt.m, pt.a, cfg);
  if (id == "linear_reflect") return verify_linear_reflect(pt.m, pt.a, cfg);
  if (id == "diff_pair") return verify_diff_pair(pt.a, pt.b, cfg);
  if (id == "diff_reflect") return verify_diff_reflect(pt.a, cfg);
  if (id == "general_rational") return verify_general_rational(pt.p, need_rational(), cfg);
  if (id == "alt_linear_pair") return verify_alt_linear_pair(pt.p, pt.a, pt.b, cfg);
  if (id == "alt_symmetric") return verify_alt_symmetric(pt.m, pt.a, cfg);
  if (id == "alt_reflect") return verify_alt_reflect(pt.m, pt.a, cfg);
  if (id == "alt_general_rational") {
    return verify_alt_general_rational(pt.p, need_rational(), cfg);
  }
  if (id == "alt_double_zeta") return verify_alt_double_zeta(pt.j, pt.m, cfg);
  if (id == "quadratic") return verify_quadratic(pt.p, pt.m, pt.a, pt.b, req.variant, cfg);
  if (id == "quadratic_11") return verify_quadratic_11(pt.a, pt.b, cfg);
  if (id == "quadratic_22") return verify_quadratic_22(pt.a, pt.b, cfg);
  if (id == "csc_lemma") return verify_csc_lemma(pt.a, pt.b, cfg);
  throw DomainError("unknown identity id '" + id + "'");
}

bool passes_guard(const std::string& id, const Point& pt, double guard) {
  const auto& names = info(id).params;
  const bool has_a = std::find(names.begin(), names.end(), "a") != names.end();
  const bool has_b = std::find(names.begin(), names.end(), "b") != names.end();
  if (has_a && integer_distance(pt.a) < guard) return false;
  if (has_b && (integer_distance(pt.b) < guard || std::abs(pt.a - pt.b) < guard)) return false;
  if (is_reflect(id) && std::abs(pt.a - 0.5) < guard) return false;
  return true;
}

// ---- rendering -----------------------------------------------------------

json params_json(const std::vector<std::pair<std::string, double>>& params) {
  json out = json::object();
  for (const auto& [name, value] : params) {
    if (is_integer_param(name)) {
      out[name] = static_cast<long>(value);
    } else {
      out[name] = value;
    }
  }
  return out;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json diagnostics_json(const ConvergenceDiagnostics& d) {
  return json{{"terms_used", d.terms_used},
              {"tail_estimate", finite_or_null(d.tail_estimate)},
              {"method", std::string(to_string(d.method))}};
}

json report_json(const IdentityReport& r) {
  json out;
  out["identity_id"] = r.identity_id;
  out["params"] = params_json(r.params);
  if (!r.variant.empty()) {
    out["variant"] = r.variant;
  }
  out["lhs"] = finite_or_null(r.lhs);
  out["rhs"] = finite_or_null(r.rhs);
  out["residual"] = finite_or_null(r.residual);
  out["tolerance"] = r.tolerance;
  out["verdict"] = r.passed ? "pass" : "fail";
  out["diagnostics"] = diagnostics_json(r.diagnostics);
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back(json{{"side", t.side}, {"label", t.label}, {"value", finite_or_null(t.value)}});
  }
  out["terms"] = std::move(terms);
  return out;
}

std::string param_text(const std::vector<std::pair<std::string, double>>& params) {
  std::string text;
  for (const auto& [name, value] : params) {
    if (!text.empty()) text += ' ';
    text += name + "=" + format_number(value);
  }
  return text;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void print_report_table(const IdentityReport& r, std::ostream& out) {
  out << "identity   " << r.identity_id;
  if (!r.variant.empty()) out << "  [" << r.variant << "]";
  out << "\nparams     " << param_text(r.params) << "\n";
  std::size_t width = 0;
  for (const auto& t : r.terms) width = std::max(width, t.label.size());
  for (const auto& t : r.terms) {
    out << "  " << t.side << "  " << std::left << std::setw(static_cast<int>(width)) << t.label
        << std::right << "  " << format_number(t.value) << "\n";
  }
  out << "lhs        " << format_number(r.lhs) << "\n"
      << "rhs        " << format_number(r.rhs) << "\n"
      << "residual   " << format_number(r.residual) << "  (tolerance "
      << format_number(r.tolerance) << ")\n"
      << "tail       " << format_number(r.diagnostics.tail_estimate) << "  via "
      << to_string(r.diagnostics.method) << ", " << r.diagnostics.terms_used << " terms\n"
      << "verdict    " << (r.passed ? "PASS" : "FAIL") << "\n";
}

void print_rows(const std::string& id, const std::vector<IdentityReport>& rows, OutputFormat format,
                const std::string& command, std::ostream& out) {
  const auto& names = info(id).params;
  double max_residual = 0.0;
  std::size_t passed = 0;
  for (const auto& r : rows) {
    max_residual = std::max(max_residual, r.residual);
    passed += r.passed ? 1 : 0;
  }
  const bool all_pass = passed == rows.size();
  if (format == OutputFormat::json) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["identity_id"] = id;
    json list = json::array();
    for (const auto& r : rows) list.push_back(report_json(r));
    doc["rows"] = std::move(list);
    doc["summary"] = json{{"points", rows.size()},
                          {"passed", passed},
                          {"max_residual", finite_or_null(max_residual)},
                          {"verdict", all_pass ? "pass" : "fail"}};
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == OutputFormat::csv) {
    out << "identity_id";
    for (const auto& n : names) out << "," << n;
    out << ",lhs,rhs,residual,verdict,terms_used\n";
    for (const auto& r : rows) {
      out << r.identity_id;
      for (const auto& [name, value] : r.params) {
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          out << "," << format_number(value);
        }
      }
      out << "," << format_number(r.lhs) << "," << format_number(r.rhs) << ","
          << format_number(r.residual) << "," << (r.passed ? "pass" : "fail") << ","
          << r.diagnostics.terms_used << "\n";
    }
    out << "summary";
    for (std::size_t i = 0; i < names.size(); ++i) out << ",";
    out << ",,," << format_number(max_residual) << "," << (all_pass ? "pass" : "fail") << ",\n";
    return;
  }
  out << std::left << std::setw(36) << "params" << std::setw(24) << "lhs" << std::setw(24)
      << "rhs" << std::setw(12) << "residual" << "verdict\n";
  for (const auto& r : rows) {
    std::ostringstream residual;
    residual << std::setprecision(3) << r.residual;
    out << std::setw(36) << param_text(r.params) << std::setw(24) << format_number(r.lhs)
        << std::setw(24) << format_number(r.rhs) << std::setw(12) << residual.str()
        << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  out << std::right << rows.size() << " points, " << passed << " pass, max residual "
      << format_number(max_residual) << "\n";
}

int print_adjudication(const QuadraticAdjudication& adj, OutputFormat format,
                       const std::string& command, std::ostream& out) {
  const bool ok = adj.consistent.has_value() && adj.every_point_has_pass &&
                  std::all_of(adj.rows.begin(), adj.rows.end(), [&](const auto& row) {
                    return row.reports[*adj.consistent].passed;
                  });
  if (format == OutputFormat::json) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["identity_id"] = "quadratic";
    json variants = json::array();
    for (const auto& v : adj.variants) variants.push_back(v.name());
    doc["variants"] = variants;
    json points = json::array();
    for (const auto& row : adj.rows) {
      json residuals = json::array();
      for (const auto& r : row.reports) residuals.push_back(finite_or_null(r.residual));
      json minimizers = json::array();
      for (auto i : row.minimizers) minimizers.push_back(adj.variants[i].name());
      points.push_back(json{{"p", row.point.p},
                            {"m", row.point.m},
                            {"a", row.point.a},
                            {"b", row.point.b},
                            {"residuals", residuals},
                            {"minimizers", minimizers}});
    }
    doc["points"] = std::move(points);
    doc["consistent_variant"] =
        adj.consistent ? json(adj.variants[*adj.consistent].name()) : json(nullptr);
    doc["every_point_has_pass"] = adj.every_point_has_pass;
    doc["verdict"] = ok ? "pass" : "fail";
    out << doc.dump(2) << "\n";
    return ok ? exit_ok : exit_failed;
  }
  if (format == OutputFormat::csv) {
    out << "identity_id,p,m,a,b,variant,residual,verdict,minimizer\n";
    for (const auto& row : adj.rows) {
      for (std::size_t i = 0; i < row.reports.size(); ++i) {
        const bool min = std::find(row.minimizers.begin(), row.minimizers.end(), i) !=
                         row.minimizers.end();
        out << "quadratic," << row.point.p << "," << row.point.m << ","
            << format_number(row.point.a) << "," << format_number(row.point.b) << ","
            << adj.variants[i].name() << "," << format_number(row.reports[i].residual) << ","
            << (row.reports[i].passed ? "pass" : "fail") << "," << (min ? "yes" : "no") << "\n";
      }
    }
    out << "summary,,,,,"
        << (adj.consistent ? adj.variants[*adj.consistent].name() : std::string("none"))
        << ",,," << (ok ? "pass" : "fail") << "\n";
    return ok ? exit_ok : exit_failed;
  }
  out << "quadratic adjudication (* = minimizer at that point)\n";
  out << std::left << std::setw(26) << "point";
  for (std::size_t i = 0; i < adj.variants.size(); ++i) {
    out << std::setw(11) << ("v" + std::to_string(i + 1));
  }
  out << "\n";
  for (const auto& row : adj.rows) {
    std::ostringstream label;
    label << "(" << row.point.p << "," << row.point.m << ") a=" << format_number(row.point.a)
          << " b=" << format_number(row.point.b);
    out << std::setw(26) << label.str();
    for (std::size_t i = 0; i < row.reports.size(); ++i) {
      std::ostringstream cell;
      cell << std::setprecision(2) << row.reports[i].residual;
      if (std::find(row.minimizers.begin(), row.minimizers.end(), i) != row.minimizers.end()) {
        cell << "*";
      }
      out << std::setw(11) << cell.str();
    }
    out << "\n";
  }
  out << std::right;
  for (std::size_t i = 0; i < adj.variants.size(); ++i) {
    out << "  v" << (i + 1) << " = " << adj.variants[i].name() << "\n";
  }
  out << "consistent minimizer: "
      << (adj.consistent ? adj.variants[*adj.consistent].name() : std::string("none")) << "\n"
      << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? exit_ok : exit_failed;
}

// ---- shared options ------------------------------------------------------

struct CommonOptions {
  long terms = 10000;
  double tol = 0.0;
  double guard = default_guard;
  std::string accel = "auto";
  std::string output = "table";
  bool parallel = false;

  void attach(CLI::App* app) {
    app->add_option("--terms", terms, "direct terms before the tail model (>= 100)");
    app->add_option("--tol", tol, "pass threshold (default: per identity class)");
    app->add_option("--guard", guard, "minimum distance of shifts from the integers");
    app->add_option("--accel", accel,
                    "auto | euler_maclaurin | richardson | euler_transform | boole | raw");
    app->add_option("--output", output, "table | json | csv");
    app->add_flag("--parallel", parallel, "evaluate sweep points on several threads");
  }

  [[nodiscard]] EvalConfig config() const {
    EvalConfig cfg;
    cfg.base_terms = terms;
    cfg.tolerance = tol;
    cfg.guard = guard;
    const auto a = parse_acceleration(accel);
    if (!a) throw DomainError("unknown --accel '" + accel + "'");
    cfg.acceleration = *a;
    const auto f = parse_output_format(output);
    if (!f) throw DomainError("unknown --output '" + output + "'");
    cfg.output = *f;
    cfg.parallel = parallel;
    cfg.validate();
    (void)cfg.effective_terms();
    return cfg;
  }
};

struct IdentityOptions {
  std::string id;
  std::string p, m, j, a, b, pairs, rational, variant;
  int max_order_sum = 0;
  bool adjudicate = false;

  void attach(CLI::App* app) {
    app->add_option("identity", id, "identity id (see list-identities)")->required();
    app->add_option("--p", p, "harmonic order(s)");
    app->add_option("--m", m, "second order / corollary index");
    app->add_option("--j", j, "double zeta depth index");
    app->add_option("--a", a, "shift a");
    app->add_option("--b", b, "shift b");
    app->add_option("--pairs", pairs, "shift pairs 'a,b;a,b;...'");
    app->add_option("--rational", rational, "r(z) as JSON [{pole,mult,coeff},...] or @file");
    app->add_option("--variant", variant, "quadratic reading, e.g. corrected/k1>=0/p+1");
    app->add_option("--max-order-sum", max_order_sum, "alt_double_zeta: all j>=1, m>=0, j+m<=N");
    app->add_flag("--adjudicate", adjudicate, "quadratic: evaluate every reading");
  }

  [[nodiscard]] Request request(double guard) const {
    Request req;
    req.id = id;
    if (!is_identity_id(id)) throw DomainError("unknown identity id '" + id + "'");
    if (!rational.empty()) req.rational = parse_rational(rational, guard);
    if (!variant.empty()) {
      const auto v = parse_quadratic_variant(variant);
      if (!v) throw DomainError("unknown --variant '" + variant + "'");
      req.variant = *v;
    }
    return req;
  }

  [[nodiscard]] const std::string& raw(const std::string& name) const {
    if (name == "p") return p;
    if (name == "m") return m;
    if (name == "j") return j;
    if (name == "a") return a;
    return b;
  }
};

std::vector<double> default_values(const std::string& id, const std::string& name) {
  if (name == "p") {
    return id == "quadratic" ? std::vector<double>{1, 2} : std::vector<double>{1, 2, 3, 4};
  }
  if (name == "m") {
    if (id == "quadratic") return {1, 2};
    if (id == "alt_reflect") return {1, 2};
    return {0, 1, 2};
  }
  if (name == "j") return {1, 2, 3};
  return {0.3, 0.25, 1.4, -0.6};
}

const std::vector<std::pair<double, double>> default_pairs = {
    {0.3, 0.7}, {0.3, -0.3}, {1.4, 2.6}, {-0.6, 0.4}, {0.25, 1.75}};

std::vector<Point> build_grid(const IdentityOptions& opt, bool sweep) {
  const auto& names = info(opt.id).params;
  const bool has_b = std::find(names.begin(), names.end(), "b") != names.end();
  std::vector<Point> grid{Point{}};

  if (opt.id == "alt_double_zeta" && (opt.max_order_sum > 0 || (sweep && opt.j.empty()))) {
    const int total = opt.max_order_sum > 0 ? opt.max_order_sum : 5;
    grid.clear();
    for (int j = 1; j <= total; ++j) {
      for (int m = 0; j + m <= total; ++m) {
        Point pt;
        pt.j = j;
        pt.m = m;
        grid.push_back(pt);
      }
    }
    return grid;
  }

  auto expand = [&](const std::string& name, const std::vector<double>& values) {
    std::vector<Point> next;
    for (const auto& base : grid) {
      for (double v : values) {
        Point pt = base;
        set(pt, name, v);
        next.push_back(pt);
      }
    }
    grid = std::move(next);
  };

  for (const auto& name : names) {
    if (name == "b") continue;
    if (name == "a" && has_b) {
      std::vector<std::pair<double, double>> pairs;
      if (!opt.pairs.empty()) {
        pairs = parse_pairs(opt.pairs);
      } else if (!opt.a.empty() && !opt.b.empty()) {
        for (double a : parse_values(opt.a)) {
          for (double b : parse_values(opt.b)) pairs.emplace_back(a, b);
        }
      } else if (!opt.a.empty() || !opt.b.empty()) {
        throw DomainError("give both --a and --b, or --pairs");
      } else if (sweep) {
        pairs = default_pairs;
      } else {
        throw DomainError("missing --a/--b");
      }
      std::vector<Point> next;
      for (const auto& base : grid) {
        for (const auto& [a, b] : pairs) {
          Point pt = base;
          pt.a = a;
          pt.b = b;
          next.push_back(pt);
        }
      }
      grid = std::move(next);
      continue;
    }
    const auto& text = opt.raw(name);
    if (!text.empty()) {
      expand(name, parse_values(text));
    } else if (sweep) {
      expand(name, default_values(opt.id, name));
    } else {
      throw DomainError("missing --" + name);
    }
  }
  return grid;
}

std::vector<IdentityReport> evaluate_grid(const Request& req, const std::vector<Point>& grid,
                                          const EvalConfig& cfg) {
  std::vector<IdentityReport> reports(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        reports[i] = evaluate(req, grid[i], cfg);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      cfg.parallel ? std::max(2u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u)) : 1u;
  if (threads == 1 || grid.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return reports;
}

// ---- eval ----------------------------------------------------------------

struct EvalOptions {
  std::string function;
  int k = 0, s = 0, j = 0, p = 0, m = 0, sigma = 1;
  long n = 0, start = 1;
  double a = 0.0;
  std::string orders;
  std::vector<std::string> shifts;
  bool backward = false;
  CLI::App* app = nullptr;

  void attach(CLI::App* sub) {
    app = sub;
    sub->add_option("function", function,
                    "zeta | alt_zeta | hurwitz | alt_hurwitz | digamma | polygamma | pi_cot | "
                    "pi_csc | harmonic | euler_sum | alt_double_zeta")
        ->required();
    sub->add_option("--k", k, "integer argument of zeta / alt_zeta");
    sub->add_option("--s", s, "order of the Hurwitz zeta");
    sub->add_option("--a", a, "real argument");
    sub->add_option("--j", j, "polygamma order / double zeta index");
    sub->add_option("--n", n, "harmonic index");
    sub->add_option("--p", p, "harmonic order");
    sub->add_option("--m", m, "double zeta index");
    sub->add_option("--sigma", sigma, "euler_sum sign (+1 or -1)");
    sub->add_option("--orders", orders, "euler_sum harmonic orders, e.g. 1,2");
    sub->add_option("--shift", shifts, "euler_sum factor a:q (repeatable)");
    sub->add_flag("--backward", backward, "euler_sum over H_{n-1}/(n-a)^q");
    sub->add_option("--start", start, "euler_sum first index");
  }

  void require(const char* name) const {
    if (app->count(std::string("--") + name) == 0) {
      throw DomainError(function + " needs --" + name);
    }
  }
};

int run_eval(const EvalOptions& opt, const CommonOptions& common, std::ostream& out) {
  const EvalConfig cfg = common.config();
  std::vector<std::pair<std::string, double>> args;
  std::optional<ConvergenceDiagnostics> diagnostics;
  double value = 0.0;
  const auto& f = opt.function;
  if (f == "zeta" || f == "alt_zeta") {
    opt.require("k");
    args = {{"k", opt.k}};
    value = f == "zeta" ? riemann_zeta(opt.k) : alt_zeta(opt.k);
  } else if (f == "hurwitz" || f == "alt_hurwitz") {
    opt.require("s");
    opt.require("a");
    args = {{"s", opt.s}, {"a", opt.a}};
    value = f == "hurwitz" ? hurwitz_zeta_conventional(opt.s, opt.a)
                           : alt_hurwitz_zeta(opt.s, opt.a);
  } else if (f == "digamma" || f == "pi_cot" || f == "pi_csc") {
    opt.require("a");
    args = {{"a", opt.a}};
    value = f == "digamma" ? digamma(opt.a) : (f == "pi_cot" ? pi_cot(opt.a) : pi_csc(opt.a));
  } else if (f == "polygamma") {
    opt.require("j");
    opt.require("a");
    args = {{"j", opt.j}, {"a", opt.a}};
    value = polygamma(opt.j, opt.a);
  } else if (f == "harmonic") {
    opt.require("n");
    opt.require("p");
    if (opt.n < 0 || opt.p < 1) throw DomainError("harmonic needs n >= 0, p >= 1");
    args = {{"n", static_cast<double>(opt.n)}, {"p", opt.p}};
    value = harmonic(opt.n, opt.p);
  } else if (f == "alt_double_zeta") {
    opt.require("j");
    opt.require("m");
    args = {{"j", opt.j}, {"m", opt.m}};
    const auto direct = alt_double_zeta_direct(opt.j, opt.m, cfg);
    value = direct.value;
    diagnostics = direct.diagnostics;
  } else if (f == "euler_sum") {
    EulerSumSpec spec;
    spec.sigma = opt.sigma;
    if (!opt.orders.empty()) {
      for (double v : parse_values(opt.orders)) {
        if (v != std::round(v)) throw DomainError("--orders must be integers");
        spec.harmonic_orders.push_back(static_cast<int>(v));
      }
    }
    for (const auto& text : opt.shifts) {
      const auto colon = text.find(':');
      if (colon == std::string::npos) throw DomainError("--shift expects a:q");
      const double a = std::stod(text.substr(0, colon));
      const int q = std::stoi(text.substr(colon + 1));
      spec.shifts.push_back({a, q});
      args.emplace_back("a" + std::to_string(spec.shifts.size()), a);
      args.emplace_back("q" + std::to_string(spec.shifts.size()), q);
    }
    spec.direction = opt.backward ? Direction::backward : Direction::forward;
    spec.start_n = opt.start;
    args.insert(args.begin(), {"sigma", opt.sigma});
    const auto result = euler_sum(spec, cfg);
    value = result.value;
    diagnostics = result.diagnostics;
  } else {
    throw DomainError("unknown function '" + f + "'");
  }

  if (cfg.output == OutputFormat::json) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = "eval";
    doc["function"] = f;
    json jargs = json::object();
    for (const auto& [name, v] : args) {
      if (v == std::round(v) && name != "a" && name.rfind("a", 0) != 0) {
        jargs[name] = static_cast<long>(v);
      } else {
        jargs[name] = v;
      }
    }
    doc["args"] = jargs;
    doc["value"] = finite_or_null(value);
    if (diagnostics) doc["diagnostics"] = diagnostics_json(*diagnostics);
    out << doc.dump(2) << "\n";
  } else if (cfg.output == OutputFormat::csv) {
    out << "function";
    for (const auto& arg : args) out << "," << arg.first;
    out << ",value";
    if (diagnostics) out << ",terms_used,tail_estimate,method";
    out << "\n" << f;
    for (const auto& arg : args) out << "," << format_number(arg.second);
    out << "," << format_number(value);
    if (diagnostics) {
      out << "," << diagnostics->terms_used << "," << format_number(diagnostics->tail_estimate)
          << "," << to_string(diagnostics->method);
    }
    out << "\n";
  } else {
    out << f << "(" << param_text(args) << ") = " << format_number(value) << "\n";
    if (diagnostics) {
      out << "tail estimate " << format_number(diagnostics->tail_estimate) << " via "
          << to_string(diagnostics->method) << ", " << diagnostics->terms_used << " terms\n";
    }
  }
  return exit_ok;
}

int run_verify(const IdentityOptions& opt, const CommonOptions& common, std::ostream& out) {
  const EvalConfig cfg = common.config();
  const Request req = opt.request(cfg.guard);
  const auto grid = build_grid(opt, false);
  if (opt.adjudicate) {
    if (opt.id != "quadratic") throw DomainError("--adjudicate applies to quadratic only");
    std::vector<QuadraticPoint> points;
    for (const auto& pt : grid) points.push_back({pt.p, pt.m, pt.a, pt.b});
    return print_adjudication(adjudicate_quadratic(points, cfg), cfg.output, "verify", out);
  }
  const auto reports = evaluate_grid(req, grid, cfg);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (reports.size() == 1 && cfg.output != OutputFormat::csv) {
    if (cfg.output == OutputFormat::json) {
      json doc;
      doc["schema_version"] = schema_version;
      doc["command"] = "verify";
      doc["report"] = report_json(reports.front());
      out << doc.dump(2) << "\n";
    } else {
      print_report_table(reports.front(), out);
    }
  } else {
    print_rows(opt.id, reports, cfg.output, "verify", out);
  }
  return all ? exit_ok : exit_failed;
}

int run_sweep(const IdentityOptions& opt, const CommonOptions& common, std::ostream& out) {
  const EvalConfig cfg = common.config();
  const Request req = opt.request(cfg.guard);
  std::vector<Point> grid;
  for (const auto& pt : build_grid(opt, true)) {
    if (passes_guard(opt.id, pt, cfg.guard)) grid.push_back(pt);
  }
  if (grid.empty()) throw DomainError("grid is empty after guard filtering");
  if (opt.adjudicate) {
    if (opt.id != "quadratic") throw DomainError("--adjudicate applies to quadratic only");
    std::vector<QuadraticPoint> points;
    for (const auto& pt : grid) points.push_back({pt.p, pt.m, pt.a, pt.b});
    return print_adjudication(adjudicate_quadratic(points, cfg), cfg.output, "sweep", out);
  }
  const auto reports = evaluate_grid(req, grid, cfg);
  print_rows(opt.id, reports, cfg.output, "sweep", out);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return all ? exit_ok : exit_failed;
}

int run_list(const CommonOptions& common, std::ostream& out) {
  const auto format = parse_output_format(common.output);
  if (!format) throw DomainError("unknown --output '" + common.output + "'");
  if (*format == OutputFormat::json) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = "list-identities";
    json list = json::array();
    for (const auto& entry : identity_table()) {
      list.push_back(json{{"identity_id", std::string(entry.id)},
                          {"params", entry.params},
                          {"tolerance", default_tolerance(entry.id)},
                          {"description", std::string(entry.description)}});
    }
    doc["identities"] = std::move(list);
    out << doc.dump(2) << "\n";
    return exit_ok;
  }
  if (*format == OutputFormat::csv) {
    out << "identity_id,params,tolerance,description\n";
    for (const auto& entry : identity_table()) {
      std::string params;
      for (const auto& p : entry.params) params += (params.empty() ? "" : " ") + p;
      out << entry.id << "," << params << "," << format_number(default_tolerance(entry.id)) << ","
          << csv_escape(std::string(entry.description)) << "\n";
    }
    return exit_ok;
  }
  for (const auto& entry : identity_table()) {
    std::string params;
    for (const auto& p : entry.params) params += (params.empty() ? "" : ",") + p;
    out << std::left << std::setw(22) << entry.id << std::setw(10) << params << std::setw(8)
        << format_number(default_tolerance(entry.id)) << entry.description << "\n";
  }
  out << std::right;
  return exit_ok;
}

}  // namespace

const std::vector<std::string>& identity_params(std::string_view id) { return info(id).params; }

std::string_view identity_description(std::string_view id) { return info(id).description; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

std::vector<double> parse_values(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse number '" + s + "'");
    }
    if (used != s.size()) throw DomainError("cannot parse number '" + s + "'");
    return v;
  };
  std::vector<double> values;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    if (item.find(':') == std::string::npos) {
      values.push_back(number(item));
      continue;
    }
    std::vector<std::string> parts;
    std::stringstream range(item);
    std::string part;
    while (std::getline(range, part, ':')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) throw DomainError("range must be start:stop[:step]");
    const double start = number(parts[0]);
    const double stop = number(parts[1]);
    const double step = parts.size() == 3 ? number(parts[2]) : 1.0;
    if (!(step > 0.0)) throw DomainError("range step must be positive");
    if (stop < start) throw DomainError("range stop is below start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    if (count > 100000) throw DomainError("range too long");
    for (long i = 0; i <= count; ++i) values.push_back(start + static_cast<double>(i) * step);
  }
  if (values.empty()) throw DomainError("empty value list");
  return values;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> pairs;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) {
    if (item.empty()) continue;
    const auto values = parse_values(item);
    if (values.size() != 2 || item.find(':') != std::string::npos) {
      throw DomainError("pair must be 'a,b', got '" + item + "'");
    }
    pairs.emplace_back(values[0], values[1]);
  }
  if (pairs.empty()) throw DomainError("empty pair list");
  return pairs;
}

RationalFunction parse_rational(const std::string& text, double guard) {
  std::string source = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream file(text.substr(1));
    if (!file) throw DomainError("cannot read " + text.substr(1));
    std::stringstream buffer;
    buffer << file.rdbuf();
    source = buffer.str();
  }
  std::vector<PoleTerm> terms;
  try {
    const auto doc = nlohmann::json::parse(source);
    if (!doc.is_array()) throw DomainError("rational must be a JSON array");
    for (const auto& item : doc) {
      PoleTerm term;
      term.pole = item.at("pole").get<double>();
      term.multiplicity = item.at("mult").get<int>();
      term.coeff = item.at("coeff").get<double>();
      terms.push_back(term);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad rational JSON: ") + e.what());
  }
  return RationalFunction::from_poles(std::move(terms), guard);
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const PrecisionError*>(&error) != nullptr) {
    return exit_precision;
  }
  return exit_domain;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parametric Euler sums: evaluation and identity verification", "eulersum"};
  app.require_subcommand(1);

  CommonOptions eval_common, verify_common, sweep_common, list_common;
  EvalOptions eval_opt;
  IdentityOptions verify_opt, sweep_opt;

  auto* eval = app.add_subcommand("eval", "evaluate a special function or Euler sum");
  eval_opt.attach(eval);
  eval_common.attach(eval);
  auto* verify = app.add_subcommand("verify", "verify one identity at one parameter point");
  verify_opt.attach(verify);
  verify_common.attach(verify);
  auto* sweep = app.add_subcommand("sweep", "verify an identity over a parameter grid");
  sweep_opt.attach(sweep);
  sweep_common.attach(sweep);
  auto* list = app.add_subcommand("list-identities", "list identity ids");
  list->add_option("--output", list_common.output, "table | json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_domain;
  }

  try {
    if (*eval) return run_eval(eval_opt, eval_common, out);
    if (*verify) return run_verify(verify_opt, verify_common, out);
    if (*sweep) return run_sweep(sweep_opt, sweep_common, out);
    return run_list(list_common, out);
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    err << (code == exit_precision ? "precision error: " : "domain error: ") << e.what() << "\n";
    return code;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("eulersum");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace eulersum::cli
