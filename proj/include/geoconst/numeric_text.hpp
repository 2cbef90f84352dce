#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace geoconst {

/// Significant digits used for every number the tools print.
inline constexpr int kPrintDigits = 12;

/// Shortest general-format rendering with `digits` significant digits.
/// Independent of the global locale.
std::string format_number(double value, int digits = kPrintDigits);

/// Strict locale-independent parse of a whole string as a double.
/// Leading/trailing whitespace is rejected. Returns nullopt on failure.
std::optional<double> parse_number(std::string_view text);

}  // namespace geoconst
