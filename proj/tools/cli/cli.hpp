#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/verify.hpp"

namespace kreweras::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
};

enum class OutputFormat { Text, Json, Csv, Bfile };

// Environment variable that overrides the default enumeration cap. The --cap
// flag takes precedence over it.
inline constexpr const char* kCapEnvVar = "KREWERAS_ENUMERATION_CAP";

struct Environment {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  IdentityEvaluator evaluator;
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, const Environment& env);

}  // namespace kreweras::cli
