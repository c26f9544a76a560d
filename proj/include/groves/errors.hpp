#pragma once

#include <stdexcept>
#include <string>

namespace groves {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input (bad fraction string, bad partition string, bad JSON).
struct ParseError : Error {
    using Error::Error;
};

// Structurally invalid argument (non-square matrix, odd-size pfaffian, ...).
struct ShapeError : Error {
    using Error::Error;
};

// Matrix or block is singular where invertibility is required.
struct SingularError : Error {
    using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

// An internal invariant was violated; indicates a bug, not bad input.
struct InvariantError : Error {
    using Error::Error;
};

}  // namespace groves
