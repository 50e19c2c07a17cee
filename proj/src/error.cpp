#include "reprfn/error.hpp"

namespace reprfn {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidGrowth: return "InvalidGrowth";
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::FileTooShort: return "FileTooShort";
    case ErrorKind::NonIncreasingPolynomial: return "NonIncreasingPolynomial";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::NegativeTerm: return "NegativeTerm";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EmptyPrefix: return "EmptyPrefix";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ThresholdExceeded: return "ThresholdExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace reprfn
