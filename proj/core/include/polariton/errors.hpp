#pragma once

#include <stdexcept>
#include <string>

namespace polariton {

// Bad physical or numerical input (negative frequency, n_max too small, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The lower branch satisfies omega_minus^2 <= 0: the quadratic Hamiltonian is
// unbounded below and no ground state exists. Reachable only with a
// diamagnetic override below the default Omega^2/omega_0.
struct InstabilityError : std::domain_error {
    using std::domain_error::domain_error;
};

// An internal numerical routine failed to converge or produced a value
// outside its guaranteed range (Jacobi sweep cap, negative radicand beyond
// rounding slack, cross-check mismatch).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural configuration problem: truncation above the state cap, sweep
// grid malformed, unknown enum string.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input file. `line` is 1-based; 0 means the header.
struct ParseError : std::runtime_error {
    long line;
    ParseError(const std::string& what, long line_) : std::runtime_error(what), line(line_) {}
};

// A measured doublet with omega_+ + omega_- < omega_c + omega_0 beyond
// rounding slack: no real coupling reproduces it. `residual` is the deficit
// of (sum_meas^2 - sum_bare^2) in meV^2.
struct InconsistentMeasurementError : std::runtime_error {
    double residual;
    InconsistentMeasurementError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
};

} // namespace polariton
