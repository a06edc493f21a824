#pragma once

#include <stdexcept>
#include <string>

namespace wham {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (bad field, bad weight, out-of-range entry, shape mismatch).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A documented precondition of a constructive operation does not hold.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

} // namespace wham
