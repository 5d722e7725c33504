#include "eulersum/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <utility>

#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

constexpr long default_ceiling = 100'000'000;

constexpr std::array<std::pair<Acceleration, std::string_view>, 6> acceleration_names = {{
    {Acceleration::automatic, "auto"},
    {Acceleration::euler_maclaurin, "euler_maclaurin"},
    {Acceleration::richardson, "richardson"},
    {Acceleration::euler_transform, "euler_transform"},
    {Acceleration::boole, "boole"},
    {Acceleration::raw, "raw"},
}};

constexpr std::array<std::pair<OutputFormat, std::string_view>, 3> format_names = {{
    {OutputFormat::table, "table"},
    {OutputFormat::json, "json"},
    {OutputFormat::csv, "csv"},
}};

}  // namespace

std::string_view to_string(Acceleration acceleration) {
  for (const auto& [value, name] : acceleration_names) {
    if (value == acceleration) {
      return name;
    }
  }
  return "unknown";
}

std::optional<Acceleration> parse_acceleration(std::string_view name) {
  for (const auto& [value, label] : acceleration_names) {
    if (label == name) {
      return value;
    }
  }
  return std::nullopt;
}

std::string_view to_string(OutputFormat format) {
  for (const auto& [value, name] : format_names) {
    if (value == format) {
      return name;
    }
  }
  return "unknown";
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  for (const auto& [value, label] : format_names) {
    if (label == name) {
      return value;
    }
  }
  return std::nullopt;
}

long max_terms_ceiling() {
  const char* env = std::getenv("EULERSUM_MAX_TERMS");
  if (env == nullptr) {
    return default_ceiling;
  }
  const std::string_view text(env);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 100) {
    throw DomainError("EULERSUM_MAX_TERMS must be an integer >= 100");
  }
  return value;
}

void EvalConfig::validate() const {
  if (base_terms < 100) {
    throw DomainError("base_terms must be >= 100");
  }
  if (!(guard > 0.0)) {
    throw DomainError("guard must be positive");
  }
  if (!(tolerance >= 0.0)) {
    throw DomainError("tolerance must be positive (or 0 for the identity default)");
  }
}

long EvalConfig::effective_terms() const { return std::min(base_terms, max_terms_ceiling()); }

}  // namespace eulersum
