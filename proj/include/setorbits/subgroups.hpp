#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "setorbits/group.hpp"

namespace setorbits {

/// Conjugation invariants used to bucket subgroups before the exact test.
struct SubgroupFingerprint {
  std::uint64_t order = 0;
  std::vector<std::size_t> orbit_sizes;  // sorted
  std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> cycle_types;  // sorted histogram

  friend auto operator<=>(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
  friend bool operator==(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
};

SubgroupFingerprint fingerprint(const PermGroup& group);

struct SubgroupClass {
  std::string label;  // "S<n>#<index>", 1-based
  PermGroup representative{1};
  std::uint64_t order = 0;
  std::uint64_t normalizer_order = 0;
  std::uint64_t class_size = 0;
  bool transitive = false;
  SubgroupFingerprint key;
};

/// Default and hard limits for all_subgroups.
inline constexpr std::size_t kDefaultSubgroupCap = 7;
inline constexpr std::size_t kMaxSubgroupDegree = 8;

struct SubgroupOptions {
  std::size_t cap = kDefaultSubgroupCap;
};

/// Conjugacy classes of subgroups of S_n, ordered by (order, fingerprint,
/// discovery). Results are cached per degree. Throws cap_exceeded when
/// n > options.cap or n > kMaxSubgroupDegree.
const std::vector<SubgroupClass>& all_subgroups(std::size_t n, const SubgroupOptions& options = {});

/// The transitive classes of all_subgroups(n), same order.
std::vector<const SubgroupClass*> transitive_classes(std::size_t n, const SubgroupOptions& options = {});

/// Some g with g A g^-1 = B, found by backtracking over point images.
std::optional<Permutation> conjugate_in_sn(const PermGroup& a, const PermGroup& b);

/// Elements g of S_n with g H g^-1 = H, as a group. Degree at most 8.
PermGroup normalizer_in_sn(const PermGroup& h);

}  // namespace setorbits
