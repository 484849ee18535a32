#pragma once

#include <stdexcept>
#include <string>

namespace spf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input, violated precondition, degree mismatch or exceeded bound.
class InputError : public Error {
public:
    using Error::Error;
};

/// Sym ⊗ ∧ requested over a ring where 2 is neither zero nor a unit.
class NotExponentialError : public InputError {
public:
    using InputError::InputError;
};

/// A result violated an identity that must hold exactly: inexact division,
/// oracle disagreement, a negative coefficient after cancellation.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// 64-bit arithmetic overflow.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace spf
