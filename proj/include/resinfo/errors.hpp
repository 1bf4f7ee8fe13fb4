// errors.hpp: exception hierarchy shared by every resinfo module.

#pragma once

#include <stdexcept>
#include <string>

namespace resinfo {

// Base of all library errors; catch this to handle any resinfo failure.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Input data that cannot be turned into a valid object (e.g. a population
// whose atoms cannot be realized at the requested dimension).
class ConstructionError : public Error {
public:
    using Error::Error;
};

// The quantity requested is infinite (e.g. residual information at psi_c = 0).
class DivergenceError : public Error {
public:
    using Error::Error;
};

// An iterative solver ran out of budget. Carries the last residual reached.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double last_residual)
        : Error(what + " (last residual " + std::to_string(last_residual) + ")"),
          last_residual_(last_residual) {}

    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

// Quadrature or root bracketing could not reach the requested accuracy.
// Carries the best estimate obtained.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

// Invalid experiment configuration; field_path names the offending entry.
class ConfigError : public Error {
public:
    ConfigError(std::string field_path, const std::string& what)
        : Error(field_path + ": " + what), field_path_(std::move(field_path)) {}

    const std::string& field_path() const noexcept { return field_path_; }

private:
    std::string field_path_;
};

}  // namespace resinfo
