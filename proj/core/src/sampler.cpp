#include "kreweras/sampler.hpp"

#include <algorithm>
#include <string>

#include "kreweras/bijection.hpp"
#include "kreweras/error.hpp"

namespace kreweras {

BigCount uniform_below(const BigCount& bound, std::mt19937_64& engine) {
  if (bound <= 0) {
    throw Error(ErrorCode::EmptySupport, "cannot draw below " + bound.str());
  }
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  while (true) {
    BigCount draw = engine() & top_mask;
    for (std::size_t w = 1; w < words; ++w) {
      draw <<= 64;
      draw |= engine();
    }
    if (draw < bound) {
      return draw;
    }
  }
}

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

UniformPathSampler::UniformPathSampler(std::uint64_t n, std::uint64_t r)
    : n_(n), r_(r) {
  if (n == 0 || r == 0) {
    throw Error(ErrorCode::EmptySupport,
                "sampling requires n >= 1 and r >= 1 (got n = " +
                    std::to_string(n) + ", r = " + std::to_string(r) + ")");
  }
  const std::uint64_t s_max = std::min(n, r);
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    total_ += refined_count(n, r, static_cast<std::int64_t>(s));
    cumulative_.push_back(total_);
  }
  if (total_ != star_lhs(n, r)) {
    throw Error(ErrorCode::InexactDivision,
                "stratum weights do not sum to N(n+r, r)");
  }
  ranker_once_ = std::vector<std::once_flag>(s_max);
  rankers_.resize(s_max);
}

const PeakRanker& UniformPathSampler::ranker(std::size_t s) const {
  std::call_once(ranker_once_[s - 1], [&] {
    rankers_[s - 1] = std::make_unique<PeakRanker>(n_, s);
  });
  return *rankers_[s - 1];
}

DyckPath UniformPathSampler::draw(std::mt19937_64& engine) const {
  const BigCount x = uniform_below(total_, engine);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  const std::size_t s = static_cast<std::size_t>(it - cumulative_.begin()) + 1;

  const PeakRanker& bases = ranker(s);
  DyckPath base = bases.unrank(uniform_below(bases.size(), engine));

  const std::uint64_t free = r_ - s;
  const std::size_t vertices = 2 * n_ + 1;
  const BigCount placements = weak_composition_count(free, vertices);
  auto multiplicities =
      unrank_weak_composition(free, vertices, uniform_below(placements, engine));
  return expand(InsertionPlan{std::move(base), std::move(multiplicities)});
}

DyckPath UniformPathSampler::sample(std::uint64_t seed,
                                    std::uint64_t index) const {
  auto engine = sample_engine(seed, index);
  return draw(engine);
}

std::vector<DyckPath> sample_uniform(std::uint64_t n, std::uint64_t r,
                                     std::uint64_t seed, std::uint64_t count) {
  const UniformPathSampler sampler(n, r);
  std::vector<DyckPath> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(sampler.sample(seed, i));
  }
  return out;
}

}  // namespace kreweras
