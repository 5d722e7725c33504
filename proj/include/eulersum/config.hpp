#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eulersum/special_fn.hpp"

namespace eulersum {

/// Tail treatment for a truncated series.
enum class Acceleration {
  automatic,        // euler_maclaurin for sigma = +1, euler_transform for sigma = -1
  euler_maclaurin,  // exact-derivative Euler-Maclaurin tail, non-alternating only
  richardson,       // extrapolation of partial sums at N, 2N, 4N, ... (log-aware)
  euler_transform,  // iterated Euler transform on the tail, alternating only
  boole,            // Boole (Euler-polynomial) summation of the tail, alternating only
  raw,              // plain partial sum
};

enum class OutputFormat { table, json, csv };

std::string_view to_string(Acceleration acceleration);
std::optional<Acceleration> parse_acceleration(std::string_view name);
std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Ceiling on the number of direct terms; EULERSUM_MAX_TERMS overrides the default.
long max_terms_ceiling();

struct EvalConfig {
  long base_terms = 10000;
  /// Pass threshold for identity residuals; 0 selects the per-identity default.
  double tolerance = 0.0;
  double guard = default_guard;
  Acceleration acceleration = Acceleration::automatic;
  OutputFormat output = OutputFormat::table;
  bool parallel = false;

  /// Throws DomainError unless base_terms >= 100, guard > 0 and tolerance >= 0.
  void validate() const;
  /// base_terms clamped to max_terms_ceiling().
  [[nodiscard]] long effective_terms() const;
};

}  // namespace eulersum
