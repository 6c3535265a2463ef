#include "kreweras/dyck_path.hpp"

#include <cassert>

#include "kreweras/error.hpp"

namespace kreweras {

DyckPath::DyckPath(std::vector<Step> steps)
    : steps_(std::move(steps)), semilength_(steps_.size() / 2) {}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  std::size_t ups = 0;
  for (Step s : steps) {
    ups += s == Step::U ? 1 : 0;
  }
  if (2 * ups != steps.size()) {
    throw Error(ErrorCode::Unbalanced,
                std::to_string(ups) + " U vs " +
                    std::to_string(steps.size() - ups) + " D",
                steps.size());
  }
  std::size_t height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::U) {
      ++height;
    } else if (height == 0) {
      throw Error(ErrorCode::DipsBelowZero, "prefix ends below the axis",
                  i + 1);
    } else {
      --height;
    }
  }
  return DyckPath(std::move(steps));
}

DyckPath DyckPath::from_valid_steps(std::vector<Step> steps) {
  assert(is_dyck(steps));
  return DyckPath(std::move(steps));
}

bool is_dyck(std::span<const Step> steps) noexcept {
  std::size_t height = 0;
  for (Step s : steps) {
    if (s == Step::U) {
      ++height;
    } else if (height-- == 0) {
      return false;
    }
  }
  return height == 0;
}

DyckPath parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      default:
        throw Error(ErrorCode::IllegalCharacter,
                    "expected 'U' or 'D'", i + 1);
    }
  }
  return DyckPath::from_steps(std::move(steps));
}

std::string render_path(const DyckPath& path) {
  std::string out;
  out.reserve(path.length());
  for (Step s : path.steps()) {
    out.push_back(to_char(s));
  }
  return out;
}

DyckPath reverse_complement(const DyckPath& path) {
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  for (Step& s : steps) {
    s = s == Step::U ? Step::D : Step::U;
  }
  return DyckPath::from_valid_steps(std::move(steps));
}

namespace {

bool is_peak_at(std::span<const Step> steps, std::size_t i) noexcept {
  return i + 1 < steps.size() && steps[i] == Step::U &&
         steps[i + 1] == Step::D;
}

}  // namespace

std::vector<std::size_t> peaks(const DyckPath& path) {
  std::vector<std::size_t> apexes;
  const auto steps = path.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (is_peak_at(steps, i)) {
      // 0-based step i is step i+1, so the apex is vertex i+1.
      apexes.push_back(i + 1);
    }
  }
  return apexes;
}

std::size_t peak_count(const DyckPath& path) noexcept {
  std::size_t count = 0;
  const auto steps = path.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    count += is_peak_at(steps, i) ? 1 : 0;
  }
  return count;
}

std::vector<PlateauSpan> peak_plateaus(const DyckPath& path) {
  std::vector<PlateauSpan> spans;
  const auto steps = path.steps();
  std::size_t i = 0;
  while (i < steps.size()) {
    if (!is_peak_at(steps, i)) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (is_peak_at(steps, end)) {
      end += 2;
    }
    const bool preceded_by_up = i > 0 && steps[i - 1] == Step::U;
    const bool followed_by_down = end < steps.size() && steps[end] == Step::D;
    if (preceded_by_up && followed_by_down) {
      // The opening U is 0-based step i-1, i.e. 1-based step i.
      spans.push_back({.first_step_index = i, .run_length = (end - i) / 2});
    }
    i = end;
  }
  return spans;
}

PathStats stats(const DyckPath& path) {
  PathStats out;
  out.peak_apexes = peaks(path);
  out.plateaus = peak_plateaus(path);
  out.peak_count = out.peak_apexes.size();
  out.plateau_count = out.plateaus.size();
  return out;
}

}  // namespace kreweras

std::size_t std::hash<kreweras::DyckPath>::operator()(
    const kreweras::DyckPath& path) const noexcept {
  // FNV-1a over the step bytes.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (kreweras::Step s : path.steps()) {
    h ^= static_cast<std::uint64_t>(s) + 1;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ path.length());
}
