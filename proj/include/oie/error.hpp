// Error types shared by every module. All are recoverable library errors;
// internal invariant breaks use assert instead.

#ifndef OIE_ERROR_HPP
#define OIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace oie {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed caller input: empty combos, size mismatches, bad identifiers.
struct InvalidInputError : Error {
    using Error::Error;
};

// An enumeration would exceed a configured cap. Never raised for results
// that are merely infeasible; infeasibility is a void value, not an error.
struct CapacityExceededError : Error {
    using Error::Error;
};

// An operation's stated precondition does not hold for these operands.
struct PreconditionViolatedError : Error {
    using Error::Error;
};

// A chosen interval or combo is not among the candidates offered by the
// source instance.
struct InvalidChoiceError : Error {
    using Error::Error;
};

// A requested variant is deliberately outside this library's scope.
struct UnsupportedError : Error {
    using Error::Error;
};

// Expression or file syntax problem; the message carries line/column.
struct ParseError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

} // namespace oie

#endif
