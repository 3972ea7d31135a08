// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace chiralcas {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid or unreadable configuration input (file contents, schema, values).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// File could not be opened or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// Numeric precondition violated (degenerate wave indices, bad ranges).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Anisotropy below the degeneracy threshold: the eigenmode basis and the
/// orientation average are undefined; callers take the isotropic branch.
class DegeneracyError : public DomainError {
public:
  using DomainError::DomainError;
};

/// The orientation-average inversion produced an arccos argument outside
/// [-1, 1] beyond the clamping tolerance (inconsistent averaged eigenvalue).
class InversionDomainError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A 4x4 inverse or the Fresnel denominator is numerically singular.
class SingularMatrixError : public Error {
public:
  using Error::Error;
};

/// The determinant argument of the free-energy integrand is <= 0
/// (unphysical reflection data).
class NonpositiveDeterminantError : public DomainError {
public:
  using DomainError::DomainError;
};

/// An iterative sum or quadrature failed to reach its tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

} // namespace chiralcas
