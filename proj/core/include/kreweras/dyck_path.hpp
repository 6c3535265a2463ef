#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kreweras {

// Ordering of the enumerators fixes the canonical path order: D sorts before
// U, which is the byte order of the rendered letters.
enum class Step : std::uint8_t { D = 0, U = 1 };

constexpr char to_char(Step step) noexcept {
  return step == Step::U ? 'U' : 'D';
}

// A balanced step sequence whose every prefix has at least as many U as D.
//
// Steps are numbered 1..2m in reports and vertices 0..2m, vertex v being the
// point reached after step v. Instances are immutable once built.
class DyckPath {
 public:
  DyckPath() = default;

  // Validates both invariants; throws kreweras::Error on failure.
  static DyckPath from_steps(std::vector<Step> steps);

  // For producers that maintain the invariants themselves (enumeration,
  // expansion). Checked with assert() in debug builds.
  static DyckPath from_valid_steps(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t semilength() const noexcept { return semilength_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  // 0-based access into the step sequence.
  Step operator[](std::size_t i) const noexcept { return steps_[i]; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend std::strong_ordering operator<=>(const DyckPath& a,
                                          const DyckPath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  explicit DyckPath(std::vector<Step> steps);

  std::vector<Step> steps_;
  std::size_t semilength_ = 0;
};

// Non-throwing validity check on a raw step sequence.
bool is_dyck(std::span<const Step> steps) noexcept;

DyckPath parse_path(std::string_view text);
std::string render_path(const DyckPath& path);

// Reverses the sequence and swaps U with D.
DyckPath reverse_complement(const DyckPath& path);

// A factor U(UD)^i D with i >= 1.
struct PlateauSpan {
  std::size_t first_step_index = 0;  // 1-based index of the opening U
  std::size_t run_length = 0;        // i, the number of peaks in the run

  friend bool operator==(const PlateauSpan&, const PlateauSpan&) = default;
};

struct PathStats {
  std::size_t peak_count = 0;
  std::size_t plateau_count = 0;
  std::vector<std::size_t> peak_apexes;  // sorted vertex indices
  std::vector<PlateauSpan> plateaus;

  friend bool operator==(const PathStats&, const PathStats&) = default;
};

// Apex vertex v of every peak, i.e. every v with step v = U and step v+1 = D.
std::vector<std::size_t> peaks(const DyckPath& path);

std::size_t peak_count(const DyckPath& path) noexcept;

// One span per maximal run of adjacent peaks that is preceded by a U and
// followed by a D. Runs touching either end of the path never qualify.
std::vector<PlateauSpan> peak_plateaus(const DyckPath& path);

PathStats stats(const DyckPath& path);

}  // namespace kreweras

template <>
struct std::hash<kreweras::DyckPath> {
  std::size_t operator()(const kreweras::DyckPath& path) const noexcept;
};
