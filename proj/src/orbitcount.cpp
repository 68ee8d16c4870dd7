#include "setorbits/orbitcount.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

#include "setorbits/error.hpp"

namespace setorbits {

namespace {

constexpr std::size_t kMaxBurnsideDegree = 40;

using CycleHistogram = std::unordered_map<std::string, std::uint64_t>;

void add_checked(std::uint64_t& acc, std::uint64_t v) {
  if (__builtin_add_overflow(acc, v, &acc))
    throw Error(ErrorKind::overflow, "Burnside sum exceeds 64 bits");
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::overflow, "Burnside sum exceeds 64 bits");
  return out;
}

std::string cycle_key(std::span<const Point> img) {
  const std::size_t n = img.size();
  std::uint64_t seen = 0;
  std::string key;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen >> i & 1) continue;
    char len = 0;
    std::size_t j = i;
    do {
      seen |= std::uint64_t{1} << j;
      j = img[j];
      ++len;
    } while (j != i);
    key.push_back(len);
  }
  std::sort(key.begin(), key.end());
  return key;
}

CycleHistogram collect_cycle_types(const PermGroup& group, const CountOptions& options) {
  if (group.degree() > kMaxBurnsideDegree)
    throw Error(ErrorKind::out_of_range,
                "degree " + std::to_string(group.degree()) + " too large for Burnside counting");
  const std::uint64_t order = group.order();
  if (order > options.element_cap)
    throw Error(ErrorKind::cap_exceeded, "group too large for element iteration (order " +
                                             std::to_string(order) + ", cap " +
                                             std::to_string(options.element_cap) + ")");

  const std::size_t blocks = group.block_count();
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(blocks)));
  std::vector<CycleHistogram> partial(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned w) {
    auto& hist = partial[w];
    for (std::size_t b = next++; b < blocks; b = next++)
      group.for_each_element_in_block(b, b + 1, [&](std::span<const Point> img) { ++hist[cycle_key(img)]; });
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
  }
  CycleHistogram merged = std::move(partial[0]);
  for (unsigned w = 1; w < jobs; ++w)
    for (const auto& [k, c] : partial[w]) merged[k] += c;
  return merged;
}

bool shortcut_applies(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n <= 2) return n == 1 || group.order() == 2;
  return contains_alternating(group);
}

}  // namespace

BurnsideSums burnside_sums(const PermGroup& group, const CountOptions& options) {
  const std::size_t n = group.degree();
  CycleHistogram hist = collect_cycle_types(group, options);
  BurnsideSums sums;
  sums.group_order = group.order();
  sums.numerator.assign(n + 1, 0);
  std::vector<std::uint64_t> poly;
  for (const auto& [key, count] : hist) {
    poly.assign(n + 1, 0);
    poly[0] = 1;
    std::size_t deg = 0;
    for (char c : key) {
      const std::size_t l = static_cast<unsigned char>(c);
      for (std::size_t t = deg + l; t >= l; --t) poly[t] += poly[t - l];
      deg += l;
    }
    for (std::size_t t = 0; t <= n; ++t) add_checked(sums.numerator[t], mul_checked(poly[t], count));
    add_checked(sums.total, mul_checked(std::uint64_t{1} << key.size(), count));
  }
  return sums;
}

OrbitProfile orbit_profile(const PermGroup& group, const CountOptions& options) {
  const std::size_t n = group.degree();
  OrbitProfile profile;
  profile.degree = n;
  if (shortcut_applies(group)) {
    profile.by_size.assign(n + 1, 1);
    profile.total = n + 1;
    return profile;
  }
  BurnsideSums sums = burnside_sums(group, options);
  profile.by_size.resize(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    if (sums.numerator[t] % sums.group_order != 0)
      throw Error(ErrorKind::internal, "Burnside numerator for size " + std::to_string(t) +
                                           " is not divisible by the group order");
    profile.by_size[t] = sums.numerator[t] / sums.group_order;
  }
  if (sums.total % sums.group_order != 0)
    throw Error(ErrorKind::internal, "Burnside total is not divisible by the group order");
  profile.total = sums.total / sums.group_order;
  return profile;
}

std::uint64_t count_set_orbits(const PermGroup& group, const CountOptions& options) {
  return orbit_profile(group, options).total;
}

std::vector<std::vector<std::uint32_t>> enumerate_set_orbits(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n > kMaxEnumerationDegree)
    throw Error(ErrorKind::out_of_range, "degree " + std::to_string(n) +
                                             " too large for subset enumeration (max " +
                                             std::to_string(kMaxEnumerationDegree) + ")");
  const std::size_t bytes = (n + 7) / 8;
  // table[g][b][v]: image mask of byte value v sitting in byte position b.
  std::vector<std::vector<std::array<std::uint32_t, 256>>> table;
  for (const auto& g : group.generators()) {
    if (g.is_identity()) continue;
    auto& t = table.emplace_back(bytes);
    for (std::size_t b = 0; b < bytes; ++b)
      for (std::uint32_t v = 0; v < 256; ++v) {
        std::uint32_t out = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          std::size_t x = b * 8 + bit;
          if (x < n && (v >> bit & 1)) out |= std::uint32_t{1} << g[static_cast<Point>(x)];
        }
        t[b][v] = out;
      }
  }
  auto apply = [&](const std::vector<std::array<std::uint32_t, 256>>& t, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::size_t b = 0; b < bytes; ++b) out |= t[b][(mask >> (8 * b)) & 0xFF];
    return out;
  };

  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<bool> visited(limit, false);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t start = 0; start < limit; ++start) {
    if (visited[start]) continue;
    std::vector<std::uint32_t> orbit{start};
    visited[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& t : table) {
        std::uint32_t image = apply(t, orbit[i]);
        if (!visited[image]) {
          visited[image] = true;
          orbit.push_back(image);
        }
      }
    orbits.push_back(std::move(orbit));
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return std::popcount(a.front()) < std::popcount(b.front());
  });
  return orbits;
}

std::string format_subset(std::uint32_t mask, std::size_t degree) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < degree; ++i) {
    if (!(mask >> i & 1)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_orbit_dump(const std::vector<std::vector<std::uint32_t>>& orbits,
                              std::size_t degree) {
  std::string out;
  for (const auto& orbit : orbits) {
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (i) out += ' ';
      out += format_subset(orbit[i], degree);
    }
    out += '\n';
  }
  return out;
}

bool is_t_set_transitive(const PermGroup& group, std::size_t t, const CountOptions& options) {
  if (t > group.degree())
    throw Error(ErrorKind::out_of_range, "subset size " + std::to_string(t) + " exceeds degree " +
                                             std::to_string(group.degree()));
  if (t == 0 || t == group.degree()) return true;
  return orbit_profile(group, options).by_size[t] == 1;
}

bool is_set_transitive(const PermGroup& group, const CountOptions& options) {
  return count_set_orbits(group, options) == group.degree() + 1;
}

}  // namespace setorbits
