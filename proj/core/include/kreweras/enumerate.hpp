#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

#include "kreweras/combinatorics.hpp"
#include "kreweras/dyck_path.hpp"

namespace kreweras {

// Largest semilength the exhaustive enumerators accept unless overridden.
// Catalan(16) is about 35.3 million paths.
inline constexpr std::size_t kDefaultEnumerationCap = 16;

// Single-consumer lazy sequence of paths. Independent streams share no state.
class PathStream {
 public:
  using Generator = std::function<std::optional<DyckPath>()>;

  explicit PathStream(Generator next) : next_(std::move(next)) {}

  std::optional<DyckPath> next() { return next_(); }

  std::vector<DyckPath> collect() {
    std::vector<DyckPath> out;
    while (auto p = next()) {
      out.push_back(std::move(*p));
    }
    return out;
  }

  class iterator {
   public:
    using value_type = DyckPath;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PathStream* stream) : stream_(stream) { ++*this; }

    const DyckPath& operator*() const { return *current_; }
    const DyckPath* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    PathStream* stream_ = nullptr;
    std::optional<DyckPath> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  Generator next_;
};

// All Dyck paths of the given semilength in lexicographic order of their
// text (D before U). Throws Error{CapExceeded} when semilength > cap.
PathStream enumerate_paths(std::size_t semilength,
                           std::size_t cap = kDefaultEnumerationCap);

// The subsequence of enumerate_paths(semilength) with exactly `peaks` peaks.
// Requires 1 <= peaks <= semilength (or both zero); otherwise
// Error{EmptyRange}.
PathStream enumerate_paths_with_peaks(std::size_t semilength, std::size_t peaks,
                                      std::size_t cap = kDefaultEnumerationCap);

// Completion counts for Dyck paths with a prescribed peak count.
//
// count(u, d, k, last_up) is the number of ways to finish a path with u
// upsteps and d downsteps left, k peaks still required, given whether the
// last emitted step was U. A D is legal only while d > u, and a D right
// after a U consumes one required peak. Ranks follow the same order as
// enumerate_paths.
class PeakRanker {
 public:
  PeakRanker(std::size_t semilength, std::size_t peaks);

  std::size_t semilength() const noexcept { return semilength_; }
  std::size_t peaks() const noexcept { return peaks_; }

  // Number of paths in the class, i.e. narayana(semilength, peaks).
  const BigCount& size() const { return count(semilength_, semilength_, peaks_, false); }

  const BigCount& count(std::size_t u, std::size_t d, std::size_t k,
                        bool last_up) const;

  // Requires path.semilength() == semilength() and peak_count == peaks().
  BigCount rank(const DyckPath& path) const;

  // Throws Error{OrdinalOutOfRange} unless 0 <= ordinal < size().
  DyckPath unrank(const BigCount& ordinal) const;

 private:
  std::size_t index(std::size_t u, std::size_t d, std::size_t k,
                    bool last_up) const noexcept;

  std::size_t semilength_;
  std::size_t peaks_;
  std::vector<BigCount> table_;
};

BigCount rank_by_peaks(const DyckPath& path);
DyckPath unrank_by_peaks(std::size_t semilength, std::size_t peaks,
                         const BigCount& ordinal);

}  // namespace kreweras
