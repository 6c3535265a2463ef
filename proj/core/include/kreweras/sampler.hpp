#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "kreweras/combinatorics.hpp"
#include "kreweras/dyck_path.hpp"
#include "kreweras/enumerate.hpp"

namespace kreweras {

// Uniform integer in [0, bound) by rejection: draw bit_length(bound) random
// bits (64 per engine call, most significant word first, top word masked)
// and retry while the draw is >= bound. Throws Error{EmptySupport} for
// bound <= 0.
BigCount uniform_below(const BigCount& bound, std::mt19937_64& engine);

// The engine used for sample `index` under `seed`: std::mt19937_64 seeded by
// std::seed_seq over the 32-bit halves {seed_lo, seed_hi, index_lo, index_hi}.
std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index);

// Exactly uniform sampler over Dyck (n+r)-paths with r peaks.
//
// A draw picks the plateau count s with weight refined_count(n, r, s), a base
// n-path with s peaks by unranking, and a weak composition of r - s over the
// base's 2n+1 vertices by unranking, then expands. Each path of the support
// has exactly one (s, base, composition) triple, so the product of the three
// uniform choices is uniform over the support.
class UniformPathSampler {
 public:
  // Throws Error{EmptySupport} when n == 0 or r == 0.
  UniformPathSampler(std::uint64_t n, std::uint64_t r);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t r() const noexcept { return r_; }
  const BigCount& support_size() const noexcept { return total_; }

  DyckPath draw(std::mt19937_64& engine) const;

  // Deterministic in (seed, index); safe to call concurrently.
  DyckPath sample(std::uint64_t seed, std::uint64_t index) const;

 private:
  const PeakRanker& ranker(std::size_t s) const;

  std::uint64_t n_;
  std::uint64_t r_;
  BigCount total_;
  std::vector<BigCount> cumulative_;  // cumulative_[s-1] = sum of weights <= s
  mutable std::vector<std::once_flag> ranker_once_;
  mutable std::vector<std::unique_ptr<PeakRanker>> rankers_;
};

// Samples 0..count-1 of UniformPathSampler(n, r) under `seed`.
std::vector<DyckPath> sample_uniform(std::uint64_t n, std::uint64_t r,
                                     std::uint64_t seed, std::uint64_t count);

}  // namespace kreweras
