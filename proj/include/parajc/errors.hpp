#pragma once

#include <stdexcept>
#include <string>

namespace parajc {

/// Invalid user-facing configuration (bad key, bad value, malformed file).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical quality gate failed (norm drift, step convergence, eigensolver).
class NumericalGateError : public std::runtime_error {
public:
    explicit NumericalGateError(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes or space tags do not match.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace parajc
