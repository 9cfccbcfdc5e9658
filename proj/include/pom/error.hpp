#ifndef POM_ERROR_HPP
#define POM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong table dimensions, out-of-range indices, bad documents.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its hypotheses (e.g. a non-radical ideal).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size or search guard was exceeded. Never a silent truncation.
class GuardExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A certificate that holds by construction failed to verify. Should never occur.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace pom

#endif  // POM_ERROR_HPP
