#pragma once

#include <stdexcept>
#include <string>

namespace liehom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in coordinate spaces of different dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An operation was called on inputs that violate its stated precondition
/// (non-ideal subspace, noncommutative algebra where a commutative one is required, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The operation needs 1/2 (or another small inverse) that the field lacks.
class UnsupportedCharacteristic : public Error {
public:
    using Error::Error;
};

/// Malformed user input: algebra files, catalog names, field names.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace liehom
