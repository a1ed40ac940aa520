#pragma once

#include <stdexcept>
#include <string>

namespace wronski {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, tuple specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Duplicate states or otherwise malformed state tuples.
class InvalidTuple : public Error {
 public:
  using Error::Error;
};

/// (g, h) hits the excluded set g ± h ∈ Z or g, h ∈ Z + 1/2.
class NonGenericParameters : public Error {
 public:
  NonGenericParameters() : Error("excluded parameter values") {}
  explicit NonGenericParameters(const std::string& what) : Error(what) {}
};

/// A polynomial that must be nonzero vanished identically.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// An identity that the engine is expected to satisfy did not hold.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace wronski
