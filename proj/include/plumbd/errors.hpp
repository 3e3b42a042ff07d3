#pragma once

#include <stdexcept>
#include <string>

namespace plumbd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Carries the full invariant-violation report; see ValidationReport.
struct ValidationError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct NotNegativeDefiniteError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct NotCharacteristicError : Error {
    using Error::Error;
};

struct UnknownVertexError : Error {
    using Error::Error;
};

struct SubsetCapExceededError : Error {
    using Error::Error;
};

struct RadiusTooSmallError : Error {
    using Error::Error;
};

struct UnsupportedFormatError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace plumbd
