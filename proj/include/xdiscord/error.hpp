#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xdiscord {

enum class ErrorKind {
  NonPositive,
  TraceError,
  PositivityViolation,
  DomainError,
  InfeasibleS,
  InvalidConfig,
  VerificationFailed,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying the violated constraint as a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xdiscord
