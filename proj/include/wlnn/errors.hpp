#pragma once

#include <stdexcept>
#include <string>

namespace wlnn {

/// Invalid arguments, malformed configuration, violated preconditions.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable, truncated, or version-mismatched files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// NaN fluxes, positivity violations, diverged solves. Carries the first
/// offending location when one is known.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, long long cell = -1)
        : std::runtime_error(what), first_cell(cell) {}
    long long first_cell;
};

} // namespace wlnn
