#pragma once

#include <stdexcept>
#include <string>

namespace qk {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input to an operation: arity mismatch, exponent cap overflow,
// zero divisor argument, prime not containing the defining ideal, ...
class StructuralError : public Error {
public:
    using Error::Error;
};

// The operation is sound but not supported for this class of input
// (e.g. associated primes of a non-monomial ring without a supplied
// decomposition). The message names the missing capability.
class CapabilityError : public Error {
public:
    using Error::Error;
};

// A mathematical invariant the library relies on failed to hold.
// Always a bug (or corrupted input); never caught internally.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Lexical / syntactic / semantic error from a text parser, with position.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column, std::string snippet);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& snippet() const { return snippet_; }

    enum class Kind { lexical, syntactic, semantic };
    Kind kind = Kind::syntactic;

private:
    int line_;
    int column_;
    std::string snippet_;
};

} // namespace qk
