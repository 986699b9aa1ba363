#pragma once

#include <stdexcept>
#include <string>

namespace curvecert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (division by zero, mixed fields, ...).
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// A requested object would be singular (zero discriminant, repeated roots).
struct SingularError : Error {
    using Error::Error;
};

/// An exhaustive computation would exceed the configured size bound.
struct BoundExceeded : Error {
    using Error::Error;
};

/// A named hypothesis of a construction or certificate failed.
struct HypothesisError : Error {
    HypothesisError(std::string tag, const std::string& what)
        : Error("hypothesis " + tag + " failed: " + what), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

}  // namespace curvecert
