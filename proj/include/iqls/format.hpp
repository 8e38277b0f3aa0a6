#pragma once

#include <string>
#include <string_view>

namespace iqls {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

/// Strict full-string double parse; throws ParseError naming `field`.
double parse_double(std::string_view text, const std::string& field);

/// Strict full-string unsigned parse; throws ParseError naming `field`.
std::size_t parse_index(std::string_view text, const std::string& field);

}  // namespace iqls
