#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dio {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the equation parser. `offset` is a byte position into the input.
struct ParseError : Error {
    enum class Kind { Syntax, UnknownVariable, Unsupported };

    ParseError(Kind k, std::size_t off, const std::string& what)
        : Error(what), kind(k), offset(off) {}

    Kind kind;
    std::size_t offset;
};

struct NotAlgebraicError : Error {
    using Error::Error;
};

struct NotQuadraticError : Error {
    using Error::Error;
};

struct NotExplicitError : Error {
    using Error::Error;
};

struct AllZeroError : Error {
    using Error::Error;
};

struct ConstantPolynomialError : Error {
    using Error::Error;
};

struct NotMonotoneCaseError : Error {
    using Error::Error;
};

struct ZeroConstantTermError : Error {
    using Error::Error;
};

struct CountExceedsBoxError : Error {
    using Error::Error;
};

struct NoAsymptoteError : Error {
    using Error::Error;
};

}  // namespace dio
