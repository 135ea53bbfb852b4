// SPDX-License-Identifier: MIT
// Error taxonomy for the binform library.
#pragma once

#include <stdexcept>
#include <string>

namespace binform {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent inputs: bad encodings, off-curve points,
// mismatched field contexts, reducible moduli, degenerate curve parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined requests: inverse of zero, quadratic with no
// root, supersingular j-invariant.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A fast-path addition law vanished on its exceptional locus.  Callers that
// want a total operation fall back to the complete law; cost assertions
// retry with fresh random inputs.
class ExceptionalInputError : public Error {
 public:
  using Error::Error;
};

// A Kummer orientation was requested for a 2-torsion base point.
class UnsupportedBaseError : public Error {
 public:
  using Error::Error;
};

}  // namespace binform
