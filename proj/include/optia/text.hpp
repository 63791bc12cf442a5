#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace optia {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Strict parsers: the whole string must be consumed. Throw ConfigError.
double parse_double(std::string_view text, std::string_view what);
std::uint64_t parse_uint(std::string_view text, std::string_view what);
/// Accepts a decimal ("0.125") or a fraction ("1/8").
double parse_rational(std::string_view text, std::string_view what);

std::vector<std::string_view> split(std::string_view text, char sep);

}  // namespace optia
