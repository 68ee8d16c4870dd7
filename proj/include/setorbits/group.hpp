#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "setorbits/perm.hpp"

namespace setorbits {

/// Default bound on explicit element iteration.
inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;

/// One level of a stabilizer chain: the orbit of `base` under the pointwise
/// stabilizer of the earlier base points, with a transversal element
/// mapping `base` to each orbit point.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> strong_generators;
  std::vector<Point> orbit;
  std::vector<Permutation> transversal;  // transversal[i] maps base to orbit[i]
  std::vector<Permutation> inverse_transversal;
  std::vector<std::int32_t> orbit_index;  // point -> position in orbit, or -1
};

/// A permutation group given by generators, with a deterministic
/// Schreier-Sims stabilizer chain built at construction. Immutable afterwards
/// and safe to share between threads.
///
/// Base points are taken in increasing order, skipping points fixed by the
/// current stabilizer, so the chain (and therefore the element iteration
/// order) is reproducible.
class PermGroup {
 public:
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree);

  /// Throws Error(degree_mismatch) when a generator has a different degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<ChainLevel>& chain() const noexcept { return levels_; }

  /// Exact order; throws Error(overflow) if it does not fit in 64 bits.
  std::uint64_t order() const;

  bool contains(const Permutation& g) const;

  /// Calls `visit` once per element. Throws Error(cap_exceeded) before
  /// iterating when order() > cap. The span is only valid during the call.
  void for_each_element(const std::function<void(std::span<const Point>)>& visit,
                        std::uint64_t cap = kDefaultElementCap) const;

  /// Restricts iteration to elements whose first-level transversal index is
  /// in [first, last). Partitions the group for parallel consumers.
  void for_each_element_in_block(std::size_t first, std::size_t last,
                                 const std::function<void(std::span<const Point>)>& visit) const;

  /// Number of first-level transversal blocks (1 for the trivial group).
  std::size_t block_count() const noexcept;

  /// Materialises every element; subject to the same cap.
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const;

 private:
  void build();
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void recompute_orbit(std::size_t level);
  void iterate(std::size_t first, std::size_t last,
               const std::function<void(std::span<const Point>)>& visit) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> levels_;
  std::optional<std::uint64_t> order_;
};

/// build_group: degree taken from the first generator.
PermGroup build_group(std::vector<Permutation> gens);

/// Orbits of the generated group on points, each sorted, ordered by least point.
std::vector<std::vector<Point>> point_orbits(const PermGroup& group);

bool is_transitive(const PermGroup& group);

/// Transitive with no nontrivial block system. Intransitive groups are
/// reported as not primitive. Uses the minimal block containing {0, b} for
/// every b != 0.
bool is_primitive(const PermGroup& group);

/// Smallest block containing both points: returns the block as a sorted
/// point list. Requires a transitive group for the result to be a block.
std::vector<Point> minimal_block(const PermGroup& group, Point a, Point b);

/// Largest k such that the group is transitive on ordered k-tuples of
/// distinct points.
std::size_t transitivity_degree(const PermGroup& group);

/// n! with overflow check.
std::uint64_t factorial(std::size_t n);

/// True when the group is S_n (order n!) or contains A_n (order n!/2, n >= 3).
bool contains_alternating(const PermGroup& group);

}  // namespace setorbits
