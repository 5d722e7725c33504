#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "eulersum/identities.hpp"
#include "eulersum/kahan.hpp"

namespace eulersum::detail {

class ReportBuilder {
 public:
  ReportBuilder(std::string id, std::vector<std::pair<std::string, double>> params) {
    report_.identity_id = std::move(id);
    report_.params = std::move(params);
  }

  void lhs(const std::string& label, double value) { add(lhs_, "lhs", label, value); }
  void rhs(const std::string& label, double value) { add(rhs_, "rhs", label, value); }

  void lhs(const std::string& label, double coeff, const SeriesValue& s) {
    track(coeff, s);
    lhs(label, coeff * s.value);
  }
  void rhs(const std::string& label, double coeff, const SeriesValue& s) {
    track(coeff, s);
    rhs(label, coeff * s.value);
  }

  void variant(std::string name) { report_.variant = std::move(name); }

  IdentityReport finish(const EvalConfig& cfg) {
    report_.lhs = lhs_.value();
    report_.rhs = rhs_.value();
    report_.residual = std::abs(report_.lhs - report_.rhs);
    if (!std::isfinite(report_.residual)) {
      report_.residual = std::numeric_limits<double>::infinity();
    }
    report_.tolerance =
        cfg.tolerance > 0.0 ? cfg.tolerance : default_tolerance(report_.identity_id);
    report_.passed = report_.residual < report_.tolerance;
    return report_;
  }

 private:
  void add(KahanSum& side, const char* name, const std::string& label, double value) {
    side += value;
    report_.terms.push_back({name, label, value});
  }

  void track(double coeff, const SeriesValue& s) {
    auto& d = report_.diagnostics;
    if (!seen_series_) {
      d.method = s.diagnostics.method;
      seen_series_ = true;
    }
    d.terms_used = std::max(d.terms_used, s.diagnostics.terms_used);
    d.tail_estimate += std::abs(coeff) * s.diagnostics.tail_estimate;
  }

  IdentityReport report_;
  KahanSum lhs_;
  KahanSum rhs_;
  bool seen_series_ = false;
};

}  // namespace eulersum::detail
