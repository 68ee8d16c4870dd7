#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setorbits {

/// Internal point label. Points are 0-based inside the library and 1-based
/// in every text format (cycle notation, dumps, CLI output).
using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}.
class Permutation {
 public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// Takes ownership of an image table; throws Error(parse) unless it is a
  /// bijection on {0..size-1}.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)"; "()" for the
  /// identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Cycle lengths with fixed points included, sorted in decreasing order.
struct CycleStructure {
  std::vector<std::size_t> lengths;

  std::size_t cycle_count() const noexcept { return lengths.size(); }
  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

/// Parses cycle notation over {1..degree}: `"()" | cycle+` with
/// `cycle := "(" int ("," int)* ")"`; whitespace is ignored.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Parses `;`-separated generators, e.g. "(1,2);(1,2,3,4)".
std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree);

/// Right-to-left product: `compose(a, b)` applies b first, then a, so
/// compose(a, b)[x] == a[b[x]].
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

CycleStructure cycle_type(const Permutation& p);

/// Number of cycles including fixed points.
std::size_t cycle_count(std::span<const Point> images);

/// Order of p as a group element (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& p);

std::string format_generators(std::span<const Permutation> gens);

}  // namespace setorbits
