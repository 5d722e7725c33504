#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulersum/config.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/series_eval.hpp"

namespace eulersum {

/// One labelled contribution to either side of an identity.
struct TermValue {
  std::string side;  // "lhs" or "rhs"
  std::string label;
  double value = 0.0;
};

struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, double>> params;
  /// Empty unless the identity has textual variants (quadratic).
  std::string variant;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::vector<TermValue> terms;
  /// Combined over every series entering the report: max terms_used, weighted sum of estimates.
  ConvergenceDiagnostics diagnostics;
  double tolerance = 0.0;
  bool passed = false;
};

/// Stable identity ids, in display order.
const std::vector<std::string_view>& identity_ids();
bool is_identity_id(std::string_view id);
/// Default pass threshold of an identity class.
double default_tolerance(std::string_view id);

IdentityReport verify_linear_pair(int p, double a, double b, const EvalConfig& cfg);
IdentityReport verify_linear_symmetric(int m, double a, const EvalConfig& cfg);
IdentityReport verify_linear_reflect(int m, double a, const EvalConfig& cfg);
IdentityReport verify_diff_pair(double a, double b, const EvalConfig& cfg);
IdentityReport verify_diff_reflect(double a, const EvalConfig& cfg);
IdentityReport verify_general_rational(int p, const RationalFunction& r, const EvalConfig& cfg);

IdentityReport verify_alt_linear_pair(int p, double a, double b, const EvalConfig& cfg);
IdentityReport verify_alt_symmetric(int m, double a, const EvalConfig& cfg);
IdentityReport verify_alt_reflect(int m, double a, const EvalConfig& cfg);
IdentityReport verify_alt_general_rational(int p, const RationalFunction& r,
                                           const EvalConfig& cfg);
IdentityReport verify_csc_lemma(double a, double b, const EvalConfig& cfg);

double alt_double_zeta_closed(int j, int m);
IdentityReport verify_alt_double_zeta(int j, int m, const EvalConfig& cfg);

/// Closed-form right side of the linear pair identity.
double linear_pair_rhs(int p, double a, double b);
/// Closed-form right side of the H_n/((n+a)^2 (n+b)^2) pair identity.
double diff_pair_rhs(double a, double b);

enum class QuadraticReading {
  as_printed,  // zeta(p) zeta(b) inside the pi cot(pi a) group
  corrected,   // zeta(p) zeta(m)
};

std::string_view to_string(QuadraticReading reading);

/*!
  One textual reading of the quadratic balance. `k1_min` is the lower index of
  the two double-indexed groups (0 in the statement, 1 in the proof);
  `second_bound_p` selects "2k1 + k2 <= p + 1" (statement) over "<= m + 1"
  (proof) for the second group.
*/
struct QuadraticVariant {
  QuadraticReading reading = QuadraticReading::corrected;
  int k1_min = 0;
  bool second_bound_p = true;

  [[nodiscard]] std::string name() const;
  friend bool operator==(const QuadraticVariant&, const QuadraticVariant&) = default;
};

/// All eight variants in a fixed order (statement-as-printed first).
std::vector<QuadraticVariant> quadratic_variants();
std::optional<QuadraticVariant> parse_quadratic_variant(std::string_view name);

/// lhs = the two quadratic series, rhs = minus every other displayed group.
IdentityReport verify_quadratic(int p, int m, double a, double b, const QuadraticVariant& variant,
                                const EvalConfig& cfg);
IdentityReport verify_quadratic_11(double a, double b, const EvalConfig& cfg);
IdentityReport verify_quadratic_22(double a, double b, const EvalConfig& cfg);

struct QuadraticPoint {
  int p = 1;
  int m = 1;
  double a = 0.0;
  double b = 0.0;
};

struct QuadraticAdjudication {
  struct Row {
    QuadraticPoint point;
    /// reports[i] uses quadratic_variants()[i]
    std::vector<IdentityReport> reports;
    /// Indices of variants whose residual is within a small factor of the best.
    std::vector<std::size_t> minimizers;
  };
  std::vector<Row> rows;
  std::vector<QuadraticVariant> variants;
  /// First variant (in fixed order) that minimizes at every point, if any.
  std::optional<std::size_t> consistent;
  /// Some variant passes at every point.
  bool every_point_has_pass = false;
};

QuadraticAdjudication adjudicate_quadratic(const std::vector<QuadraticPoint>& points,
                                           const EvalConfig& cfg);

}  // namespace eulersum
