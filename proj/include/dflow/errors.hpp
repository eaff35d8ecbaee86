#pragma once

#include <stdexcept>
#include <string>

namespace dflow {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input describing an invalid object (cycles, broken
/// associativity, unknown state names, non-morphisms).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A homotopy-invariant construction was asked for on a flow not known to
/// be cofibrant.
class CofibrancyError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the input is too large.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace dflow
