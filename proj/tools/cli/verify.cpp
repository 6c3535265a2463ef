#include "cli/verify.hpp"

#include <chrono>
#include <map>
#include <unordered_set>

#include "cli/report.hpp"
#include "kreweras/bijection.hpp"
#include "kreweras/enumerate.hpp"

namespace kreweras::cli {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json terms_json(const IdentityReport& report) {
  return to_json(report)["per_s_terms"];
}

}  // namespace

nlohmann::json to_json(const VerificationSummary& summary) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : summary.failures) {
    failures.push_back({{"parameters", f.parameters},
                        {"expected", f.expected},
                        {"actual", f.actual},
                        {"detail", f.detail}});
  }
  return {{"checked_cases", summary.checked_cases},
          {"failures", std::move(failures)},
          {"elapsed_ms", summary.elapsed_ms},
          {"passed", summary.passed()}};
}

VerificationSummary verify_identity(std::uint64_t n_max, std::uint64_t r_max,
                                    const IdentityEvaluator& evaluator) {
  const auto start = Clock::now();
  VerificationSummary summary;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    // star[r] for r = 1..r_max+1; slot 0 unused.
    std::vector<IdentityReport> star(r_max + 2);
    for (std::uint64_t r = 1; r <= r_max + 1; ++r) {
      star[r] = evaluator.star(n, r);
    }
    for (std::uint64_t r = 1; r <= r_max; ++r) {
      ++summary.checked_cases;
      if (star[r].lhs != star[r].rhs) {
        summary.failures.push_back({{{"check", "star"}, {"n", n}, {"r", r}},
                                    star[r].lhs.str(),
                                    star[r].rhs.str(),
                                    terms_json(star[r])});
      }
    }
    for (std::uint64_t r = 0; r <= r_max; ++r) {
      const IdentityReport original = evaluator.original(n, r);
      const IdentityReport& shifted = star[r + 1];
      summary.checked_cases += 3;
      if (original.lhs != original.rhs) {
        summary.failures.push_back({{{"check", "original"}, {"n", n}, {"r", r}},
                                    original.lhs.str(),
                                    original.rhs.str(),
                                    terms_json(original)});
      }
      if (original.lhs != shifted.lhs) {
        summary.failures.push_back(
            {{{"check", "shift_lhs"}, {"n", n}, {"r", r}},
             original.lhs.str(),
             shifted.lhs.str(),
             nlohmann::json::object()});
      }
      if (original.rhs != shifted.rhs) {
        summary.failures.push_back(
            {{{"check", "shift_rhs"}, {"n", n}, {"r", r}},
             original.rhs.str(),
             shifted.rhs.str(),
             {{"original_terms", terms_json(original)},
              {"star_terms", terms_json(shifted)}}});
      }
    }
  }
  summary.elapsed_ms = millis_since(start);
  return summary;
}

namespace {

void check_paths(std::size_t m, std::size_t cap, VerificationSummary& summary,
                 std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& joint) {
  bool round_trip_failed = false;
  bool transport_failed = false;
  for (const DyckPath& q : enumerate_paths(m, cap)) {
    const PathStats st = stats(q);
    ++joint[{st.peak_count, st.plateau_count}];

    const InsertionPlan plan = plan_of(q);
    const DyckPath back = expand(plan);
    ++summary.checked_cases;
    if (back != q && !round_trip_failed) {
      round_trip_failed = true;
      summary.failures.push_back({{{"check", "round_trip"}, {"m", m}},
                                  render_path(q),
                                  render_path(back),
                                  {{"path", render_path(q)}}});
    }
    ++summary.checked_cases;
    const std::size_t base_peaks = peak_count(plan.base);
    if (base_peaks != st.plateau_count && !transport_failed) {
      transport_failed = true;
      summary.failures.push_back({{{"check", "plateau_transport"}, {"m", m}},
                                  std::to_string(st.plateau_count),
                                  std::to_string(base_peaks),
                                  {{"path", render_path(q)}}});
    }
  }
}

void check_partition(std::size_t m, std::size_t r, std::size_t cap,
                     VerificationSummary& summary) {
  ++summary.checked_cases;
  auto fail = [&](const std::string& expected, const std::string& actual,
                  const DyckPath& path) {
    summary.failures.push_back({{{"check", "fiber_partition"}, {"m", m}, {"r", r}},
                                expected,
                                actual,
                                {{"path", render_path(path)}}});
  };
  std::unordered_set<DyckPath> covered;
  for (const DyckPath& base : enumerate_paths(m - r, cap)) {
    if (peak_count(base) > r) {
      continue;
    }
    std::uint64_t size = 0;
    for (const DyckPath& q : fiber(base, r)) {
      ++size;
      if (!covered.insert(q).second) {
        return fail("disjoint fibers", "overlap", q);
      }
      if (peak_count(q) != r) {
        return fail(std::to_string(r) + " peaks",
                    std::to_string(peak_count(q)) + " peaks", q);
      }
    }
    if (fiber_size(base, r) != size) {
      return fail(fiber_size(base, r).str(), std::to_string(size), base);
    }
  }
  std::uint64_t target = 0;
  for (const DyckPath& q : enumerate_paths_with_peaks(m, r, cap)) {
    ++target;
    if (!covered.count(q)) {
      return fail("covered", "missing", q);
    }
  }
  if (target != covered.size()) {
    fail(std::to_string(target), std::to_string(covered.size()), DyckPath{});
  }
}

}  // namespace

VerificationSummary verify_bijection(std::size_t semilength_max,
                                     std::size_t cap) {
  const auto start = Clock::now();
  VerificationSummary summary;
  for (std::size_t m = 0; m <= semilength_max; ++m) {
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> joint;
    check_paths(m, cap, summary, joint);

    for (std::size_t r = 1; r < m; ++r) {
      for (std::size_t s = 0; s <= r; ++s) {
        ++summary.checked_cases;
        const auto it = joint.find({r, s});
        const BigCount observed = it == joint.end() ? 0 : it->second;
        const BigCount predicted = refined_count(m - r, r, static_cast<std::int64_t>(s));
        if (observed != predicted) {
          summary.failures.push_back(
              {{{"check", "refined_count"}, {"m", m}, {"r", r}, {"s", s}},
               predicted.str(),
               observed.str(),
               nlohmann::json::object()});
        }
      }
      check_partition(m, r, cap, summary);
    }
  }
  summary.elapsed_ms = millis_since(start);
  return summary;
}

}  // namespace kreweras::cli
