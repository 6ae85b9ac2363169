#pragma once

#include <stdexcept>
#include <string>

namespace tproduct {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible with the requested operation.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// A spectrum that is not conjugate-symmetric along mode 3 and therefore has
/// no real preimage.
class SymmetryViolation : public Error {
public:
    using Error::Error;
};

/// Some Fourier-domain frontal slice is numerically singular.
class SingularTensor : public Error {
public:
    using Error::Error;
};

class InvalidTau : public Error {
public:
    using Error::Error;
};

/// Constructor arguments that break a type invariant (non-finite entries,
/// zero extents, non-positive tolerances).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed TNS3 file.
class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tproduct
