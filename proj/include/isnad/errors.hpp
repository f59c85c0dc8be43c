#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isnad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input text. Carries the 1-based line number of the offending row.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }
    const char* kind() const noexcept override { return "parse"; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a data-model rule (duplicate ids, empty chain lists, ...).
class ValidationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "validation"; }
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain"; }
};

/// Lookup of an identifier that does not exist.
class LookupError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "lookup"; }
};

/// Broken internal invariant; indicates a caller skipped a required stage.
class InvariantError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "invariant"; }
};

}  // namespace isnad
