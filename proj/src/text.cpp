#include "optia/text.hpp"

#include <charconv>
#include <cmath>

#include "optia/error.hpp"

namespace optia {

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

double parse_double(std::string_view text, std::string_view what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        throw ConfigError(std::string(what) + ": expected a number, got '" + std::string(text) + "'");
    return value;
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError(std::string(what) + ": expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

double parse_rational(std::string_view text, std::string_view what) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_double(text, what);
    const double num = parse_double(text.substr(0, slash), what);
    const double den = parse_double(text.substr(slash + 1), what);
    if (den == 0.0) throw ConfigError(std::string(what) + ": zero denominator");
    return num / den;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace optia
