#include "iqls/format.hpp"

#include <charconv>
#include <system_error>

#include "iqls/errors.hpp"

namespace iqls {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, const std::string& field) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("malformed number for " + field + ": '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_index(std::string_view text, const std::string& field) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("malformed integer for " + field + ": '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace iqls
