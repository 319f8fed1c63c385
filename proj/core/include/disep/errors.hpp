#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. sqrt of a negative).
class DomainError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A polynomial does not have the degree an operation requires.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Degree-deficient input to the separability checks.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Canonical-case or construction parameters violate their constraints.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class SingularCurve : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Quad synthesis produced a solution space of the wrong dimension.
class SynthesisError : public Error {
 public:
  SynthesisError(const std::string& what, std::size_t dimension) : Error(what), dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

}  // namespace disep
