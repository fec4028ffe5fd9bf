#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeff {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (netlist syntax, numeric literals).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Structurally invalid data (disconnected graph, zero weight, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Evaluation of a rational function at a zero of its denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Iterative root search ran out of iterations. Carries the best iterate
/// and its worst residual so callers can report or retry.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<std::complex<double>> best, double residual)
        : Error(what), best_(std::move(best)), residual_(residual) {}

    const std::vector<std::complex<double>>& best_iterate() const { return best_; }
    double residual() const { return residual_; }

private:
    std::vector<std::complex<double>> best_;
    double residual_;
};

} // namespace zeff
