#include "geoconst/numeric_text.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace geoconst {

std::string format_number(double value, int digits) {
  std::array<char, 64> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::optional<double> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // from_chars does not accept a leading '+'.
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace geoconst
