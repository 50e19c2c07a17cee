#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reprfn {

enum class ErrorKind {
  InvalidSpec,
  InvalidGrowth,
  FileNotFound,
  MalformedFile,
  FileTooShort,
  NonIncreasingPolynomial,
  NotStrictlyIncreasing,
  NegativeTerm,
  Overflow,
  EmptyPrefix,
  LengthMismatch,
  ThresholdExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported as an Error. All kinds are input or
// configuration errors from the CLI's point of view (exit status 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reprfn
