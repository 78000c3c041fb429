#pragma once

#include <stdexcept>
#include <string>

namespace semifield {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (NaN, value outside
/// the carrier, empty support, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A user-supplied semifield specification or generator failed a probe.
class InvalidSpecError : public Error {
public:
    using Error::Error;
};

/// The power and entropic families are not semifields at r = 0.
class DegenerateFamilyError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Geometric mean (r = 0) of a vector with both x_i^{w_i} = 0 and x_j^{w_j} = inf.
class MixedExtremesAtZero : public DomainError {
public:
    using DomainError::DomainError;
};

/// Raised only in strict mode: every weight is zero while some x_j > 0.
class AllWeightsZero : public DomainError {
public:
    using DomainError::DomainError;
};

/// Decoding requires an idempotent addition.
class NonIdempotentField : public DomainError {
public:
    using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class FieldMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class UnknownSemifield : public Error {
public:
    using Error::Error;
};

}  // namespace semifield
