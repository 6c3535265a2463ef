#include "kreweras/bijection.hpp"

#include <numeric>
#include <string>

#include "kreweras/error.hpp"

namespace kreweras {

std::int64_t InsertionPlan::inserted() const noexcept {
  return std::accumulate(multiplicities.begin(), multiplicities.end(),
                         std::int64_t{0});
}

namespace {

// Marks the two steps of every peak of the input.
std::vector<bool> peak_step_mask(std::span<const Step> steps) {
  std::vector<bool> mask(steps.size(), false);
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i] == Step::U && steps[i + 1] == Step::D) {
      mask[i] = true;
      mask[i + 1] = true;
    }
  }
  return mask;
}

}  // namespace

InsertionPlan plan_of(const DyckPath& path) {
  const auto steps = path.steps();
  const std::vector<bool> in_peak = peak_step_mask(steps);

  std::vector<Step> survivors;
  survivors.reserve(steps.size());
  std::vector<std::int64_t> multiplicities(steps.size() + 1, 0);
  std::size_t i = 0;
  while (i < steps.size()) {
    if (in_peak[i]) {
      // Peaks never overlap, so a marked step starts a UD pair here.
      ++multiplicities[survivors.size()];
      i += 2;
    } else {
      survivors.push_back(steps[i]);
      ++i;
    }
  }
  multiplicities.resize(survivors.size() + 1);

  InsertionPlan plan{.base = DyckPath::from_valid_steps(std::move(survivors)),
                     .multiplicities = std::move(multiplicities)};
  // Remove the UD owed to each apex of the base. Both flanking steps of a base
  // peak survived, so at least one input peak sat between them.
  for (std::size_t apex : peaks(plan.base)) {
    --plan.multiplicities[apex];
  }
  return plan;
}

ReduceResult reduce(const DyckPath& path) {
  InsertionPlan plan = plan_of(path);
  DyckPath base = plan.base;
  return ReduceResult{std::move(base), stats(path), std::move(plan)};
}

DyckPath expand(const InsertionPlan& plan) {
  const DyckPath& base = plan.base;
  const std::size_t vertices = base.length() + 1;
  if (plan.multiplicities.size() != vertices) {
    throw Error(ErrorCode::InvalidPlan,
                "multiplicity vector has length " +
                    std::to_string(plan.multiplicities.size()) +
                    ", base has " + std::to_string(vertices) + " vertices");
  }
  std::vector<std::int64_t> blocks = plan.multiplicities;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (blocks[v] < 0) {
      throw Error(ErrorCode::InvalidPlan,
                  "negative multiplicity at vertex " + std::to_string(v));
    }
  }
  for (std::size_t apex : peaks(base)) {
    ++blocks[apex];
  }

  const auto total = std::accumulate(blocks.begin(), blocks.end(), std::int64_t{0});
  std::vector<Step> steps;
  steps.reserve(base.length() + 2 * static_cast<std::size_t>(total));
  for (std::size_t v = 0; v < vertices; ++v) {
    for (std::int64_t j = 0; j < blocks[v]; ++j) {
      steps.push_back(Step::U);
      steps.push_back(Step::D);
    }
    if (v < base.length()) {
      steps.push_back(base[v]);
    }
  }
  return DyckPath::from_valid_steps(std::move(steps));
}

BigCount weak_composition_count(std::uint64_t total, std::size_t parts) {
  if (parts == 0) {
    return total == 0 ? 1 : 0;
  }
  return binomial(total + parts - 1, static_cast<std::int64_t>(parts - 1));
}

std::vector<std::int64_t> unrank_weak_composition(std::uint64_t total,
                                                  std::size_t parts,
                                                  const BigCount& ordinal) {
  const BigCount size = weak_composition_count(total, parts);
  if (ordinal < 0 || ordinal >= size) {
    throw Error(ErrorCode::OrdinalOutOfRange,
                "ordinal " + ordinal.str() + " not below " + size.str());
  }
  std::vector<std::int64_t> out(parts, 0);
  if (parts == 0) {
    return out;
  }
  BigCount rest = ordinal;
  std::uint64_t remaining = total;
  for (std::size_t v = 0; v + 1 < parts; ++v) {
    const std::size_t tail = parts - v - 1;
    std::uint64_t x = 0;
    for (;; ++x) {
      BigCount with_x = weak_composition_count(remaining - x, tail);
      if (rest < with_x) {
        break;
      }
      rest -= with_x;
    }
    out[v] = static_cast<std::int64_t>(x);
    remaining -= x;
  }
  out[parts - 1] = static_cast<std::int64_t>(remaining);
  return out;
}

BigCount rank_weak_composition(std::span<const std::int64_t> composition) {
  std::uint64_t remaining = 0;
  for (std::int64_t part : composition) {
    if (part < 0) {
      throw Error(ErrorCode::InvalidArgument, "negative part");
    }
    remaining += static_cast<std::uint64_t>(part);
  }
  BigCount ordinal = 0;
  for (std::size_t v = 0; v + 1 < composition.size(); ++v) {
    const std::size_t tail = composition.size() - v - 1;
    const auto part = static_cast<std::uint64_t>(composition[v]);
    for (std::uint64_t x = 0; x < part; ++x) {
      ordinal += weak_composition_count(remaining - x, tail);
    }
    remaining -= part;
  }
  return ordinal;
}

bool next_weak_composition(std::vector<std::int64_t>& composition) {
  // Move one unit from the last nonzero part to its left neighbour and push
  // the rest of that part to the end.
  std::size_t last = composition.size();
  for (std::size_t v = composition.size(); v-- > 0;) {
    if (composition[v] != 0) {
      last = v;
      break;
    }
  }
  if (last == composition.size() || last == 0) {
    return false;
  }
  const std::int64_t carry = composition[last] - 1;
  ++composition[last - 1];
  composition[last] = 0;
  composition.back() = carry;
  return true;
}

BigCount fiber_size(const DyckPath& base, std::size_t r) {
  const std::size_t s = peak_count(base);
  if (r < s) {
    return 0;
  }
  return weak_composition_count(r - s, base.length() + 1);
}

PathStream fiber(const DyckPath& base, std::size_t r) {
  const std::size_t s = peak_count(base);
  if (r < s) {
    throw Error(ErrorCode::PeakDeficit,
                "r = " + std::to_string(r) + " is below the base's " +
                    std::to_string(s) + " peaks");
  }
  std::vector<std::int64_t> first(base.length() + 1, 0);
  first.back() = static_cast<std::int64_t>(r - s);
  return PathStream([plan = InsertionPlan{base, std::move(first)},
                     started = false,
                     done = false]() mutable -> std::optional<DyckPath> {
    if (done) {
      return std::nullopt;
    }
    if (started && !next_weak_composition(plan.multiplicities)) {
      done = true;
      return std::nullopt;
    }
    started = true;
    return expand(plan);
  });
}

JointDistribution joint_distribution(std::size_t semilength, std::size_t cap) {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> tally;
  for (const DyckPath& path : enumerate_paths(semilength, cap)) {
    ++tally[{peak_count(path), peak_plateaus(path).size()}];
  }
  JointDistribution out;
  for (const auto& [key, count] : tally) {
    out.emplace(key, BigCount(count));
  }
  return out;
}

}  // namespace kreweras
