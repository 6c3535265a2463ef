// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kreweras/bijection.hpp"
#include "kreweras/combinatorics.hpp"
#include "kreweras/dyck_path.hpp"
#include "kreweras/enumerate.hpp"
#include "kreweras/sampler.hpp"
#include "oracle.hpp"

namespace {

using namespace kreweras;

constexpr std::uint64_t kSamplerSeed = 42;

// Each check returns an empty string on success, else a short reason.
using Check = std::function<std::string()>;

std::string refined_bijective_count() {
  for (std::size_t m = 2; m <= 12; ++m) {
    const auto joint = oracle::joint_counts(m);
    for (std::size_t r = 1; r < m; ++r) {
      for (std::size_t s = 0; s <= r; ++s) {
        const auto it = joint.find({r, s});
        const std::uint64_t observed = it == joint.end() ? 0 : it->second;
        const BigCount predicted = refined_count(m - r, r, static_cast<std::int64_t>(s));
        if (predicted != observed) {
          return "m=" + std::to_string(m) + " r=" + std::to_string(r) + " s=" +
                 std::to_string(s) + " observed " + std::to_string(observed) +
                 " predicted " + predicted.str();
        }
      }
    }
  }
  return {};
}

std::string identity_star_sweep() {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t r = 1; r <= 200; ++r) {
      if (star_lhs(n, r) != star_rhs(n, r).rhs) {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r);
      }
    }
  }
  return {};
}

std::string original_form_and_shift() {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    for (std::uint64_t r = 0; r <= 100; ++r) {
      const BigCount lhs = kreweras_lhs(n, r);
      if (lhs != kreweras_rhs(n, r)) {
        return "original n=" + std::to_string(n) + " r=" + std::to_string(r);
      }
      if (lhs != star_lhs(n, r + 1)) {
        return "shift n=" + std::to_string(n) + " r=" + std::to_string(r);
      }
    }
  }
  return {};
}

std::string fiber_partition() {
  for (std::size_t m = 1; m <= 9; ++m) {
    const auto words = oracle::dyck_words(m);
    for (std::size_t r = 1; r < m; ++r) {
      std::set<std::string> target;
      for (const auto& w : words) {
        if (oracle::count_peaks(w) == r) target.insert(w);
      }
      std::set<std::string> covered;
      for (const auto& base_word : oracle::dyck_words(m - r)) {
        const auto s = static_cast<std::int64_t>(oracle::count_peaks(base_word));
        if (s > static_cast<std::int64_t>(r)) continue;
        const DyckPath base = parse_path(base_word);
        std::uint64_t size = 0;
        for (const DyckPath& q : fiber(base, r)) {
          ++size;
          if (!covered.insert(render_path(q)).second) {
            return "overlap at " + render_path(q);
          }
        }
        const auto n = static_cast<std::int64_t>(m - r);
        const std::uint64_t expected =
            oracle::small_binomial(2 * n + static_cast<std::int64_t>(r) - s,
                                   static_cast<std::int64_t>(r) - s);
        if (size != expected) {
          return "fiber of " + base_word + " has " + std::to_string(size) +
                 " paths, expected " + std::to_string(expected);
        }
      }
      if (covered != target) {
        return "union mismatch at m=" + std::to_string(m) + " r=" + std::to_string(r);
      }
    }
  }
  return {};
}

std::string round_trips() {
  for (std::size_t m = 0; m <= 9; ++m) {
    for (const DyckPath& q : enumerate_paths(m)) {
      if (expand(plan_of(q)) != q) return "expand(plan_of(" + render_path(q) + "))";
    }
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const DyckPath& base : enumerate_paths(n)) {
      for (std::int64_t total = 0; total <= 4; ++total) {
        for (const auto& mult : oracle::weak_compositions(total, 2 * n + 1)) {
          const InsertionPlan plan{base, mult};
          if (plan_of(expand(plan)) != plan) {
            return "plan_of(expand(...)) over base " + render_path(base);
          }
        }
      }
    }
  }
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t r = (m == 0 ? 0 : 1); r <= m; ++r) {
      const PeakRanker ranker(m, r);
      BigCount ordinal = 0;
      for (const DyckPath& q : enumerate_paths_with_peaks(m, r)) {
        if (ranker.rank(q) != ordinal) return "rank of " + render_path(q);
        if (ranker.unrank(ordinal) != q) return "unrank to " + render_path(q);
        ++ordinal;
      }
      if (ordinal != ranker.size()) return "class size at m=" + std::to_string(m);
    }
  }
  return {};
}

std::string figure_vector() {
  const DyckPath q = parse_path("UUDUDUUUDUDDDDUUDD");
  const PathStats st = stats(q);
  if (st.peak_count != 5 || st.plateau_count != 2) {
    return "stats r=" + std::to_string(st.peak_count) + " s=" +
           std::to_string(st.plateau_count);
  }
  const ReduceResult reduced = reduce(q);
  if (reduced.base.semilength() != 4 || peak_count(reduced.base) != 2) {
    return "base " + render_path(reduced.base);
  }
  return {};
}

std::string sampler_uniformity() {
  constexpr std::uint64_t kDraws = 60000;
  const auto samples = sample_uniform(2, 2, kSamplerSeed, kDraws);
  std::map<std::string, std::uint64_t> hist;
  for (const DyckPath& p : samples) {
    if (peak_count(p) != 2) return render_path(p) + " does not have 2 peaks";
    ++hist[render_path(p)];
  }
  std::set<std::string> support;
  for (const auto& w : oracle::dyck_words(4)) {
    if (oracle::count_peaks(w) == 2) support.insert(w);
  }
  if (support.size() != 6 || hist.size() != 6) {
    return "support has " + std::to_string(hist.size()) + " paths";
  }
  for (const auto& [w, c] : hist) {
    if (!support.count(w)) return w + " outside the support";
    const double freq = static_cast<double>(c) / kDraws;
    if (freq < 1.0 / 6 - 0.01 || freq > 1.0 / 6 + 0.01) {
      return w + " frequency " + std::to_string(freq);
    }
  }
  return {};
}

std::string narayana_row_sums() {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    BigCount sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) sum += narayana(n, k);
    if (sum != catalan(n)) return "n=" + std::to_string(n);
  }
  return {};
}

struct Run {
  int code;
  std::string out;
};

Run run_command(const std::string& command) {
  const auto out_path = std::filesystem::temp_directory_path() /
                        ("kreweras_acceptance_" + std::to_string(::getpid()) + ".out");
  const std::string full = command + " > '" + out_path.string() + "' 2>/dev/null";
  const int status = std::system(full.c_str());
  std::ifstream in(out_path);
  std::stringstream text;
  text << in.rdbuf();
  std::filesystem::remove(out_path);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string cli_contract() {
  const std::string cli = KREWERAS_CLI_PATH;
  const std::string faulty = KREWERAS_FAULT_CLI_PATH;

  Run run = run_command("'" + cli + "' verify-identity --n-max 200 --r-max 200");
  if (run.code != 0) return "verify-identity exited " + std::to_string(run.code);

  run = run_command("'" + cli + "' verify-bijection --semilength-max 12");
  if (run.code != 0) return "verify-bijection exited " + std::to_string(run.code);

  run = run_command("'" + faulty + "' --format json verify-identity --n-max 5 --r-max 5");
  if (run.code != 1) return "fault-injected build exited " + std::to_string(run.code);
  const auto report = nlohmann::json::parse(run.out, nullptr, false);
  if (report.is_discarded() || !report.contains("failures") || report["failures"].empty()) {
    return "fault-injected build printed no failures";
  }

  run = run_command("'" + cli + "' stats UDDU");
  if (run.code != 2) return "malformed path exited " + std::to_string(run.code);
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"refined bijective count, m in 2..12", refined_bijective_count},
      {"identity (*) sweep, n, r <= 200", identity_star_sweep},
      {"original form and shift, n <= 100, r <= 100", original_form_and_shift},
      {"fiber partition, m <= 9", fiber_partition},
      {"round trips and rank/unrank", round_trips},
      {"figure vector UUDUDUUUDUDDDDUUDD", figure_vector},
      {"sampler uniformity, n = r = 2, seed 42", sampler_uniformity},
      {"Narayana row sums, n <= 200", narayana_row_sums},
      {"CLI exit-code contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = criteria[i].second();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", reason.empty() ? "PASS" : "FAIL",
                i + 1, criteria[i].first.c_str(), seconds, reason.empty() ? "" : " - ",
                reason.c_str());
    if (!reason.empty()) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
