#include "axial/errors.hpp"

namespace axial {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::InvolutionMismatch: return "InvolutionMismatch";
    case ErrorKind::MiyamotoNotAutomorphism: return "MiyamotoNotAutomorphism";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::PrerequisiteUnavailable: return "PrerequisiteUnavailable";
    case ErrorKind::DataInconsistency: return "DataInconsistency";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace axial
