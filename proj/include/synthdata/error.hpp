#pragma once

#include <stdexcept>
#include <string>

namespace synthdata {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (CSV cell, config document).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Column naming or table-shape violations (duplicate header, mismatched schemas).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A referenced column does not exist.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Too few observations for the requested statistic.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one element received none.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// A column with zero variance where variation is required.
class DegenerateColumnError : public Error {
public:
    using Error::Error;
};

/// Cholesky factorization failed; `pivot` is the zero-based index of the
/// first non-positive pivot.
class FactorizationError : public Error {
public:
    FactorizationError(const std::string& what, std::size_t pivot_index)
        : Error(what), pivot(pivot_index) {}
    std::size_t pivot;
};

/// Incompatible matrix/vector dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

}  // namespace synthdata
