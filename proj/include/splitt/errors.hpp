#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitt {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape or index mismatch between a representation and its quiver.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// The caller asked for something the operation is not defined for
/// (e.g. reflecting at a vertex that is neither a sink nor a source).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Input outside the supported class (non-Dynkin quiver for an operation
/// that needs finiteness, tilting set violating F(T) in add P_H, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed. Always indicates a bug or corrupted data.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A symbolic computation left the truncated model.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace splitt
