#pragma once

#include <stdexcept>
#include <string>

namespace exshift {

enum class ErrorKind {
  CompositionNotZero,
  DimensionMismatch,
  NotMonomial,
  NotRealizable,
  SingularMatrix,
  AmbientTooSmall,
  GenericityFailure,
  StabilityFailure,
  NotStable,
  NotSquarefree,
  RouteMismatch,
  OracleDisagreement,
  InputError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositionNotZero: return "CompositionNotZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::StabilityFailure: return "StabilityFailure";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    case ErrorKind::InputError: return "InputError";
  }
  return "Unknown";
}

/// Base class of every error raised by the library. `kind()` identifies the
/// failure without RTTI so the CLI can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what) : Error(K, what) {}
};

using CompositionNotZero = ErrorOf<ErrorKind::CompositionNotZero>;
using DimensionMismatch = ErrorOf<ErrorKind::DimensionMismatch>;
using NotMonomial = ErrorOf<ErrorKind::NotMonomial>;
using NotRealizable = ErrorOf<ErrorKind::NotRealizable>;
using SingularMatrix = ErrorOf<ErrorKind::SingularMatrix>;
using AmbientTooSmall = ErrorOf<ErrorKind::AmbientTooSmall>;
using GenericityFailure = ErrorOf<ErrorKind::GenericityFailure>;
using StabilityFailure = ErrorOf<ErrorKind::StabilityFailure>;
using NotStable = ErrorOf<ErrorKind::NotStable>;
using NotSquarefree = ErrorOf<ErrorKind::NotSquarefree>;
using RouteMismatch = ErrorOf<ErrorKind::RouteMismatch>;
using OracleDisagreement = ErrorOf<ErrorKind::OracleDisagreement>;
using InputError = ErrorOf<ErrorKind::InputError>;

}  // namespace exshift
