#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace feq {

/// Shortest-safe round-trip rendering: 17 significant digits, "%.17g".
std::string format_real(double v);

/// Parses a complete decimal literal (optional sign, optional exponent).
/// Returns nullopt unless the whole view is consumed.
std::optional<double> parse_real(std::string_view text);

}  // namespace feq
