#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cxho {

enum class ErrorKind {
  InvalidParameter,
  KineticDivergence,
  PotentialDivergence,
  RegulatorInvalid,
  OutOfDomain,
  DivisionDegenerate,
  AngleTooSteep,
  NonFiniteSample,
  PathInvalid,
  NotNormalizable,
  ValidityExceeded,
  ConvergenceViolated,
  LengthMismatch,
  VanishingOverlap,
  SignUndefined,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Non-fatal diagnostics (heavy truncation tails, ill-conditioned Gram
/// matrices). Functions append to it when the caller passes one.
using Warnings = std::vector<std::string>;

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::KineticDivergence: return "KineticDivergence";
    case ErrorKind::PotentialDivergence: return "PotentialDivergence";
    case ErrorKind::RegulatorInvalid: return "RegulatorInvalid";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::DivisionDegenerate: return "DivisionDegenerate";
    case ErrorKind::AngleTooSteep: return "AngleTooSteep";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::PathInvalid: return "PathInvalid";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::ValidityExceeded: return "ValidityExceeded";
    case ErrorKind::ConvergenceViolated: return "ConvergenceViolated";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::VanishingOverlap: return "VanishingOverlap";
    case ErrorKind::SignUndefined: return "SignUndefined";
  }
  return "Unknown";
}

}  // namespace cxho
