#pragma once

#include <stdexcept>
#include <string>

namespace aim {

// Invalid run configuration (bad field values, inconsistent windows).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// Input outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// Two jets of different truncation order (or expansion point) were combined.
struct OrderMismatch : std::runtime_error {
    explicit OrderMismatch(const std::string& m) : std::runtime_error(m) {}
};

// A derivative was requested from a jet whose order is already spent; the
// series order was too small for the requested iteration count.
struct OrderExhausted : std::runtime_error {
    explicit OrderExhausted(const std::string& m) : std::runtime_error(m) {}
};

// Series division by a jet with vanishing constant term.
struct DivisionByZeroConstantTerm : std::runtime_error {
    explicit DivisionByZeroConstantTerm(const std::string& m) : std::runtime_error(m) {}
};

// Parameters outside the closed-form spectrum's validity (V2 != 0, ell != 0,
// or negative square-root arguments).
struct UnsupportedParams : std::runtime_error {
    explicit UnsupportedParams(const std::string& m) : std::runtime_error(m) {}
};

// The eigenvalue scan saw no sign change of the termination function at any
// iteration depth: no bound states inside the energy window.
struct NoRootsFound : std::runtime_error {
    explicit NoRootsFound(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace aim
