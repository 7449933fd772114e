#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liecat {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  CapacityExceeded,
  DegreeOverflow,
  ContextMismatch,
  ZeroScale,
  SyntaxError,
  UnknownGenerator,
  BadSpec,
  NotLinear,
  Singular,
  NotInvertible,
  ShapeMismatch,
  PreconditionFailed,
  UnknownSuite,
  ConfigInvalid,
  InternalError,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type; `code()`
/// carries the stable error name shown by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace liecat
