#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace echarge {

/// Base of every error raised by the library. The CLI maps subclasses of
/// InputError to exit code 2 and anything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problems with caller-supplied data (files, parameters, states).
class InputError : public Error {
public:
    using Error::Error;
};

/// A physical or numerical invariant is violated. `invariant()` names it
/// (e.g. "trace_tol", "density.psd") and `magnitude()` is the size of the
/// violation where one exists.
class ValidationError : public InputError {
public:
    ValidationError(std::string invariant, const std::string &detail, double magnitude = 0.0)
        : InputError("validation error [" + invariant + "]: " + detail),
          invariant_(std::move(invariant)),
          detail_(detail),
          magnitude_(magnitude) {}

    [[nodiscard]] const std::string &invariant() const noexcept { return invariant_; }
    [[nodiscard]] const std::string &detail() const noexcept { return detail_; }
    [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

private:
    std::string invariant_;
    std::string detail_;
    double      magnitude_;
};

class ShapeError : public InputError {
public:
    explicit ShapeError(const std::string &detail) : InputError("shape error [dims]: " + detail) {}
};

class ResourceLimitError : public InputError {
public:
    explicit ResourceLimitError(const std::string &detail) : InputError("resource limit: " + detail) {}
};

class UnsupportedFormError : public InputError {
public:
    explicit UnsupportedFormError(const std::string &detail) : InputError("unsupported form: " + detail) {}
};

/// The ensemble lacks the structure a bound needs (purity, orthogonality, ...).
class PreconditionError : public InputError {
public:
    explicit PreconditionError(const std::string &detail) : InputError("precondition failed: " + detail) {}
};

/// Structured-text syntax or schema problems, with location information.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

} // namespace echarge
