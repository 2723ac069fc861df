#include "xdiscord/error.hpp"

namespace xdiscord {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::TraceError: return "TraceError";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InfeasibleS: return "InfeasibleS";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace xdiscord
