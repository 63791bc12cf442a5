#pragma once

#include <stdexcept>
#include <string>

namespace optia {

/// An inconsistent benchmark, algorithm or experiment configuration.
/// Raised before any evaluation takes place.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A results file that cannot be read back.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace optia
