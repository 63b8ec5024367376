#pragma once

#include <stdexcept>
#include <string>

namespace braidcl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedScalar : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A computation would need a tensor degree above the truncation cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured work budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class BraidEquationViolated : public Error {
 public:
  using Error::Error;
};

class NotInvolutive : public Error {
 public:
  using Error::Error;
};

class FormNotCompatible : public Error {
 public:
  using Error::Error;
};

class FormNotPsiSymmetric : public Error {
 public:
  using Error::Error;
};

class NotInSubspace : public Error {
 public:
  using Error::Error;
};

/// The extended braiding left the exterior subspaces; signals an internal bug.
class ClosureViolation : public Error {
 public:
  using Error::Error;
};

class SplitInvalid : public Error {
 public:
  using Error::Error;
};

class NotFiniteDimensional : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class IndexOutOfRange : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NonInvertibleBraid : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace braidcl
