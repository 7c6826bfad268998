#pragma once

#include <stdexcept>
#include <string>

namespace planrec {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: unparseable files, bad record shapes, out-of-range
/// probability vectors. Maps to CLI exit code 2.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

/// Semantically invalid request against well-formed data: unknown goal,
/// invalid library, unknown label. Maps to CLI exit code 1.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Raised under the `halt` dead-state policy when an observed segment is
/// inconsistent with every remaining hypothesis.
class DeadStateError : public DomainError {
public:
    explicit DeadStateError(const std::string& what) : DomainError(what) {}
};

} // namespace planrec
