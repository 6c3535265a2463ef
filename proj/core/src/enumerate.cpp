#include "kreweras/enumerate.hpp"

#include <memory>
#include <string>

#include "kreweras/error.hpp"

namespace kreweras {

namespace {

void check_cap(std::size_t semilength, std::size_t cap) {
  if (semilength > cap) {
    throw Error(ErrorCode::CapExceeded,
                "semilength " + std::to_string(semilength) +
                    " exceeds enumeration cap " + std::to_string(cap));
  }
}

// Advances `steps` to the next Dyck path in text order. Returns false after
// the last path, U^m D^m.
bool next_dyck(std::vector<Step>& steps) {
  const std::size_t m = steps.size() / 2;
  // Rightmost D that can become U: one whose prefix has fewer than m ups.
  std::size_t ups = 0;
  std::size_t pivot = steps.size();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::D && ups < m) {
      pivot = i;
    }
    ups += steps[i] == Step::U ? 1 : 0;
  }
  if (pivot == steps.size()) {
    return false;
  }
  steps[pivot] = Step::U;
  std::size_t ups_used = 0;
  std::size_t height = 0;
  for (std::size_t i = 0; i <= pivot; ++i) {
    if (steps[i] == Step::U) {
      ++ups_used;
      ++height;
    } else {
      --height;
    }
  }
  // Smallest completion: descend whenever the height allows it.
  for (std::size_t i = pivot + 1; i < steps.size(); ++i) {
    if (height > 0 || ups_used == m) {
      steps[i] = Step::D;
      --height;
    } else {
      steps[i] = Step::U;
      ++ups_used;
      ++height;
    }
  }
  return true;
}

const BigCount& zero_count() {
  static const BigCount zero = 0;
  return zero;
}

}  // namespace

PathStream enumerate_paths(std::size_t semilength, std::size_t cap) {
  check_cap(semilength, cap);
  std::vector<Step> first;
  first.reserve(2 * semilength);
  for (std::size_t i = 0; i < semilength; ++i) {
    first.push_back(Step::U);
    first.push_back(Step::D);
  }
  return PathStream([steps = std::move(first), started = false,
                     done = false]() mutable -> std::optional<DyckPath> {
    if (done) {
      return std::nullopt;
    }
    if (started && !next_dyck(steps)) {
      done = true;
      return std::nullopt;
    }
    started = true;
    return DyckPath::from_valid_steps(steps);
  });
}

PathStream enumerate_paths_with_peaks(std::size_t semilength, std::size_t peaks,
                                      std::size_t cap) {
  check_cap(semilength, cap);
  const bool valid = semilength == 0 ? peaks == 0
                                     : peaks >= 1 && peaks <= semilength;
  if (!valid) {
    throw Error(ErrorCode::EmptyRange,
                "peak count " + std::to_string(peaks) +
                    " outside [1, " + std::to_string(semilength) + "]");
  }
  auto ranker = std::make_shared<const PeakRanker>(semilength, peaks);
  return PathStream([ranker, ordinal = BigCount(0)]() mutable
                    -> std::optional<DyckPath> {
    if (ordinal >= ranker->size()) {
      return std::nullopt;
    }
    DyckPath path = ranker->unrank(ordinal);
    ++ordinal;
    return path;
  });
}

PeakRanker::PeakRanker(std::size_t semilength, std::size_t peaks)
    : semilength_(semilength),
      peaks_(peaks),
      table_((semilength + 1) * (semilength + 1) * (peaks + 1) * 2) {
  for (std::size_t u = 0; u <= semilength_; ++u) {
    for (std::size_t d = u; d <= semilength_; ++d) {
      for (std::size_t k = 0; k <= peaks_; ++k) {
        for (bool last_up : {false, true}) {
          BigCount& cell = table_[index(u, d, k, last_up)];
          if (u == 0 && d == 0) {
            cell = k == 0 ? 1 : 0;
            continue;
          }
          if (u > 0) {
            cell += table_[index(u - 1, d, k, true)];
          }
          if (d > u) {
            if (!last_up) {
              cell += table_[index(u, d - 1, k, false)];
            } else if (k > 0) {
              cell += table_[index(u, d - 1, k - 1, false)];
            }
          }
        }
      }
    }
  }
}

std::size_t PeakRanker::index(std::size_t u, std::size_t d, std::size_t k,
                              bool last_up) const noexcept {
  return ((u * (semilength_ + 1) + d) * (peaks_ + 1) + k) * 2 +
         (last_up ? 1 : 0);
}

const BigCount& PeakRanker::count(std::size_t u, std::size_t d, std::size_t k,
                                  bool last_up) const {
  if (u > semilength_ || d > semilength_ || k > peaks_ || d < u) {
    return zero_count();
  }
  return table_[index(u, d, k, last_up)];
}

namespace {

// Completions that take a D from the given state.
const BigCount& down_branch(const PeakRanker& ranker, std::size_t u,
                            std::size_t d, std::size_t k, bool last_up) {
  if (d <= u) {
    return zero_count();
  }
  if (last_up) {
    return k > 0 ? ranker.count(u, d - 1, k - 1, false) : zero_count();
  }
  return ranker.count(u, d - 1, k, false);
}

}  // namespace

BigCount PeakRanker::rank(const DyckPath& path) const {
  if (path.semilength() != semilength_ || peak_count(path) != peaks_) {
    throw Error(ErrorCode::InvalidArgument,
                "path is not in the ranked class (semilength " +
                    std::to_string(semilength_) + ", " +
                    std::to_string(peaks_) + " peaks)");
  }
  BigCount ordinal = 0;
  std::size_t u = semilength_;
  std::size_t d = semilength_;
  std::size_t k = peaks_;
  bool last_up = false;
  for (Step s : path.steps()) {
    if (s == Step::U) {
      ordinal += down_branch(*this, u, d, k, last_up);
      --u;
      last_up = true;
    } else {
      if (last_up) {
        --k;
      }
      --d;
      last_up = false;
    }
  }
  return ordinal;
}

DyckPath PeakRanker::unrank(const BigCount& ordinal) const {
  if (ordinal < 0 || ordinal >= size()) {
    throw Error(ErrorCode::OrdinalOutOfRange,
                "ordinal " + ordinal.str() + " not below " + size().str());
  }
  BigCount rest = ordinal;
  std::vector<Step> steps;
  steps.reserve(2 * semilength_);
  std::size_t u = semilength_;
  std::size_t d = semilength_;
  std::size_t k = peaks_;
  bool last_up = false;
  while (u + d > 0) {
    const BigCount& down = down_branch(*this, u, d, k, last_up);
    if (rest < down) {
      steps.push_back(Step::D);
      if (last_up) {
        --k;
      }
      --d;
      last_up = false;
    } else {
      rest -= down;
      steps.push_back(Step::U);
      --u;
      last_up = true;
    }
  }
  return DyckPath::from_valid_steps(std::move(steps));
}

BigCount rank_by_peaks(const DyckPath& path) {
  return PeakRanker(path.semilength(), peak_count(path)).rank(path);
}

DyckPath unrank_by_peaks(std::size_t semilength, std::size_t peaks,
                         const BigCount& ordinal) {
  return PeakRanker(semilength, peaks).unrank(ordinal);
}

}  // namespace kreweras
