#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kreweras {

enum class ErrorCode {
  IllegalCharacter,
  Unbalanced,
  DipsBelowZero,
  CapExceeded,
  EmptyRange,
  OrdinalOutOfRange,
  InexactDivision,
  InvalidPlan,
  PeakDeficit,
  EmptySupport,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. `index()` is set for parse errors and
// holds the 1-based step index of the offending character.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace kreweras
