#pragma once

#include <stdexcept>
#include <string>

namespace pure {

inline constexpr double kPi = 3.14159265358979323846;

// Base class for every error thrown by the library. Subclasses carry the
// failure category so callers (and the CLI) can report a typed message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad or inconsistent configuration values.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Mismatched shapes, out-of-range indices, too-short signals.
class DimensionError : public Error {
public:
    using Error::Error;
};

// File system and file format failures outside the bitstream parser.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace pure
