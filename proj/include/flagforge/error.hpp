#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagforge {

/// Failure categories raised by the library. The CLI maps every kind except
/// CharacterizationMismatch and InternalAssert to a usage/format error.
enum class ErrorKind {
  NotPrime,
  TooLarge,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  InvalidDelta,
  InvalidT,
  ZeroMatrix,
  AmbientMismatch,
  LengthMismatch,
  TypeMismatch,
  BadParams,
  BadTypeSet,
  BadTick,
  NotInvertible,
  TooSmall,
  DimMismatch,
  CharacterizationMismatch,
  InternalAssert,
  Malformed,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidDelta: return "InvalidDelta";
    case ErrorKind::InvalidT: return "InvalidT";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadTypeSet: return "BadTypeSet";
    case ErrorKind::BadTick: return "BadTick";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorKind::InternalAssert: return "InternalAssert";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flagforge
