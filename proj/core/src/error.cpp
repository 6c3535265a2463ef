#include "kreweras/error.hpp"

namespace kreweras {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::Unbalanced: return "Unbalanced";
    case ErrorCode::DipsBelowZero: return "DipsBelowZero";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::OrdinalOutOfRange: return "OrdinalOutOfRange";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::PeakDeficit: return "PeakDeficit";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> index) {
  std::string out(to_string(code));
  if (index) {
    out += " at index " + std::to_string(*index);
  }
  if (!message.empty()) {
    out += ": " + message;
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(format_message(code, message, index)),
      code_(code),
      index_(index) {}

}  // namespace kreweras
