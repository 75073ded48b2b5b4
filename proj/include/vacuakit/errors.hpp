#pragma once

#include <stdexcept>
#include <string>

namespace vacuakit {

//! Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//! Invalid argument values (non-positive lengths, negative energies, ...).
struct DomainError : Error {
    using Error::Error;
};

//! An energy density that must be non-negative was negative.
struct NegativeEnergy : DomainError {
    using DomainError::DomainError;
};

//! The potential vanished where a ratio against it was requested.
struct ZeroPotential : DomainError {
    using DomainError::DomainError;
};

//! Two field grids that must share positions do not.
struct GridMismatch : DomainError {
    using DomainError::DomainError;
};

//! Root refinement ran out of iterations before meeting its residual target.
struct FailedConvergence : Error {
    using Error::Error;
};

//! Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

//! Fewer than two minima were available for vacuum classification.
struct InsufficientMinima : Error {
    using Error::Error;
};

//! A construction required a positive energy gap but none was available.
struct NonPositiveGap : Error {
    using Error::Error;
};

} // namespace vacuakit
