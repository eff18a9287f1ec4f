#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace feq {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Input text that could not be parsed (expressions, interval syntax).
// ---------------------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(std::size_t position, std::string expected)
        : ParseError("syntax error at position " + std::to_string(position) +
                         ": expected " + expected,
                     position),
          expected_(std::move(expected)) {}
    const std::string& expected() const noexcept { return expected_; }

private:
    std::string expected_;
};

class UnknownIdentifier : public ParseError {
public:
    UnknownIdentifier(std::string name, std::size_t position)
        : ParseError("unknown identifier '" + name + "' at position " +
                         std::to_string(position),
                     position),
          name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class IntervalSyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

// ---------------------------------------------------------------------------
// Problem definitions that are well-formed text but not a valid IVP.
// ---------------------------------------------------------------------------

class ValidationError : public Error {
public:
    using Error::Error;
};

class OverlapError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ArgumentError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroBError : public ValidationError {
public:
    ZeroBError() : ValidationError("b must be nonzero") {}
};

class CoverageError : public ValidationError {
public:
    CoverageError(const std::string& uncovered)
        : ValidationError("representative set does not cover " + uncovered),
          uncovered_(uncovered) {}
    const std::string& uncovered() const noexcept { return uncovered_; }

private:
    std::string uncovered_;
};

/// The closure of an initial set touches a limit point of the equation.
class PenlpViolation : public ValidationError {
public:
    explicit PenlpViolation(double limit_point);
    double limit_point() const noexcept { return limit_point_; }

private:
    double limit_point_;
};

// ---------------------------------------------------------------------------
// Evaluation-time failures.
// ---------------------------------------------------------------------------

/// An expression produced NaN/Inf or hit a singular operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A query point outside the set where the extension is determined.
class OutOfDomainError : public Error {
public:
    OutOfDomainError(double x, const std::string& why);
    double point() const noexcept { return x_; }

private:
    double x_;
};

class RecursionDepthError : public Error {
public:
    using Error::Error;
};

/// Broken internal invariant; indicates a bug in validation.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace feq
