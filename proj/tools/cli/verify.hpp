#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kreweras/combinatorics.hpp"

namespace kreweras::cli {

struct VerificationFailure {
  nlohmann::json parameters;  // {"check": ..., plus the swept indices}
  std::string expected;       // decimal, or a rendered path
  std::string actual;
  nlohmann::json detail;      // per-s terms or the counterexample path
};

struct VerificationSummary {
  std::uint64_t checked_cases = 0;
  std::vector<VerificationFailure> failures;
  double elapsed_ms = 0;

  bool passed() const noexcept { return failures.empty(); }
};

nlohmann::json to_json(const VerificationSummary& summary);

// Sources of the two identity forms. Tests substitute a perturbed evaluator
// to check that failures are reported.
struct IdentityEvaluator {
  std::function<IdentityReport(std::uint64_t, std::uint64_t)> star = star_rhs;
  std::function<IdentityReport(std::uint64_t, std::uint64_t)> original =
      kreweras_report;
};

// For 1 <= n <= n_max: star form for 1 <= r <= r_max, original form for
// 0 <= r <= r_max, and the shift original(n, r) == star(n, r+1) on both
// sides for 0 <= r <= r_max.
VerificationSummary verify_identity(std::uint64_t n_max, std::uint64_t r_max,
                                    const IdentityEvaluator& evaluator = {});

// For every m <= semilength_max: expand(plan_of(q)) == q, plateau transport
// under reduce, the fiber partition of paths with r peaks for 1 <= r < m, and
// refined_count against the exhaustive joint distribution.
VerificationSummary verify_bijection(std::size_t semilength_max,
                                     std::size_t cap);

}  // namespace kreweras::cli
