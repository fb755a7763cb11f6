#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curveforge {

/// Base of every error raised by the library. The CLI maps the concrete
/// type onto its exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// Arithmetic mixing two different quadratic fields.
class IncompatibleField : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::string origin, std::size_t line, std::size_t column)
        : InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          origin_(std::move(origin)), line_(line), column_(column), detail_(message) {}

    const std::string& origin() const noexcept { return origin_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string origin_;
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

/// The requested construction does not apply to this input (exit code 1):
/// a reducible conic, a degree gap, irrational nodes, and so on.
class NotApplicable : public Error {
public:
    using Error::Error;
};

/// A bounded search or an algebraic-number step gave up (exit code 3).
class Inconclusive : public Error {
public:
    using Error::Error;
};

/// A computed result contradicts a proven theorem. Always a bug (exit code 4).
class TheoremContradiction : public Error {
public:
    using Error::Error;
};

}  // namespace curveforge
