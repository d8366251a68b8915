#pragma once

#include <stdexcept>
#include <string>

namespace axial {

enum class ErrorKind {
  SyntaxError,
  DivisionByZero,
  UnknownSymbol,
  DescriptorMismatch,
  DenominatorVanishes,
  InvalidField,
  DimensionMismatch,
  AmbientMismatch,
  NotAnIdeal,
  NotIdempotent,
  NotSemisimple,
  InvolutionMismatch,
  MiyamotoNotAutomorphism,
  NoStabilization,
  WindowTooSmall,
  ConstraintViolation,
  PrerequisiteUnavailable,
  DataInconsistency,
  InvalidInput,
  UnknownEntry,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace axial
