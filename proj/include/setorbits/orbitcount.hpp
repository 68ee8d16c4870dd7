#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "setorbits/group.hpp"

namespace setorbits {

/// (s_0, ..., s_n) and their sum s(G).
struct OrbitProfile {
  std::size_t degree = 0;
  std::vector<std::uint64_t> by_size;
  std::uint64_t total = 0;

  friend bool operator==(const OrbitProfile&, const OrbitProfile&) = default;
};

struct CountOptions {
  std::uint64_t element_cap = kDefaultElementCap;
  unsigned jobs = 1;
};

/// Raw Burnside sums before division: numerator[t] = sum over g of the
/// number of t-subsets fixed by g, and total = sum over g of 2^c(g).
struct BurnsideSums {
  std::uint64_t group_order = 0;
  std::vector<std::uint64_t> numerator;
  std::uint64_t total = 0;
};

/// Sums over every element. No S_n / A_n shortcut: this is the iteration
/// itself. Throws cap_exceeded or overflow.
BurnsideSums burnside_sums(const PermGroup& group, const CountOptions& options = {});

/// s(G). Groups containing A_n (n >= 3) or equal to S_n return n+1 without
/// iterating.
std::uint64_t count_set_orbits(const PermGroup& group, const CountOptions& options = {});

OrbitProfile orbit_profile(const PermGroup& group, const CountOptions& options = {});

/// Largest degree accepted by enumerate_set_orbits.
inline constexpr std::size_t kMaxEnumerationDegree = 22;

/// Set-orbits found by direct search over all 2^n subsets. Point i is bit
/// i-1. Each orbit lists its members in discovery order starting from its
/// smallest mask; orbits are sorted by (popcount, smallest mask).
std::vector<std::vector<std::uint32_t>> enumerate_set_orbits(const PermGroup& group);

/// "{1,3}" style, "{}" for the empty set.
std::string format_subset(std::uint32_t mask, std::size_t degree);

/// One orbit per line, members separated by single spaces.
std::string format_orbit_dump(const std::vector<std::vector<std::uint32_t>>& orbits,
                              std::size_t degree);

bool is_t_set_transitive(const PermGroup& group, std::size_t t, const CountOptions& options = {});
bool is_set_transitive(const PermGroup& group, const CountOptions& options = {});

}  // namespace setorbits
