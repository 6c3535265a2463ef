#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kreweras/combinatorics.hpp"
#include "kreweras/dyck_path.hpp"
#include "kreweras/enumerate.hpp"

namespace kreweras {

// A base path of semilength n together with extra UD counts for each of its
// 2n+1 vertices. The UD owed to every peak apex of the base is implicit.
struct InsertionPlan {
  DyckPath base;
  std::vector<std::int64_t> multiplicities;

  // Sum of multiplicities, i.e. r - s for the path this plan expands to.
  std::int64_t inserted() const noexcept;

  friend bool operator==(const InsertionPlan&, const InsertionPlan&) = default;
};

struct ReduceResult {
  DyckPath base;
  PathStats original_stats;
  InsertionPlan plan;
};

// Deletes both steps of every peak of the input in one pass. Peaks that
// appear only after deletion are kept.
ReduceResult reduce(const DyckPath& path);

// Inserts (UD)^e at each base vertex v, where e = m_v plus one if v is a
// peak apex of the base. Throws Error{InvalidPlan} for a vector of the wrong
// length or a negative entry.
DyckPath expand(const InsertionPlan& plan);

// The unique plan with expand(plan_of(q)) == q.
InsertionPlan plan_of(const DyckPath& path);

// Weak compositions of `total` into `parts` parts, ordered lexicographically
// with the first part most significant: (0,...,0,total) comes first and
// (total,0,...,0) last.
BigCount weak_composition_count(std::uint64_t total, std::size_t parts);
std::vector<std::int64_t> unrank_weak_composition(std::uint64_t total,
                                                  std::size_t parts,
                                                  const BigCount& ordinal);
BigCount rank_weak_composition(std::span<const std::int64_t> composition);
// Steps to the next composition in the order above; false after the last.
bool next_weak_composition(std::vector<std::int64_t>& composition);

// Every Dyck path with r peaks that reduces to `base`, one per weak
// composition of r - s over the 2n+1 vertices, in composition order.
// Throws Error{PeakDeficit} when r is smaller than the base's peak count.
PathStream fiber(const DyckPath& base, std::size_t r);

// Expected length of fiber(base, r): C(2n + r - s, r - s).
BigCount fiber_size(const DyckPath& base, std::size_t r);

// (peak count, plateau count) -> number of Dyck paths of the semilength.
using JointDistribution = std::map<std::pair<std::size_t, std::size_t>, BigCount>;

JointDistribution joint_distribution(std::size_t semilength,
                                     std::size_t cap = kDefaultEnumerationCap);

}  // namespace kreweras
