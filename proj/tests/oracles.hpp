#pragma once

// Slow, independent reference computations used only by tests. Nothing here
// touches the stabilizer chain or the Burnside code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "setorbits/perm.hpp"

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images raw(const setorbits::Permutation& p) { return Images(p.images().begin(), p.images().end()); }

inline std::vector<Images> raw(const std::vector<setorbits::Permutation>& gens) {
  std::vector<Images> out;
  for (const auto& g : gens) out.push_back(raw(g));
  return out;
}

/// All elements, by breadth-first closure under right multiplication.
inline std::set<Images> closure(const std::vector<Images>& gens, std::size_t n) {
  Images id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Images> seen{id};
  std::vector<Images> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Images h(n);
      for (std::size_t x = 0; x < n; ++x) h[x] = g[queue[i][x]];
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return seen;
}

/// Per-size orbit counts by union-find over all 2^n masks.
inline std::vector<std::uint64_t> subset_profile(const std::vector<Images>& gens, std::size_t n) {
  const std::uint32_t limit = 1u << n;
  std::vector<std::uint32_t> parent(limit);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (std::uint32_t m = 0; m < limit; ++m) {
      std::uint32_t img = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (m >> x & 1) img |= 1u << g[x];
      std::uint32_t a = find(m), b = find(img);
      if (a != b) parent[a] = b;
    }
  std::vector<std::uint64_t> profile(n + 1, 0);
  for (std::uint32_t m = 0; m < limit; ++m)
    if (find(m) == m) ++profile[__builtin_popcount(m)];
  return profile;
}

/// True when some partition into blocks of size strictly between 1 and n is
/// preserved by every generator. Exhaustive over set partitions.
inline bool has_nontrivial_block_system(const std::vector<Images>& gens, std::size_t n) {
  std::vector<std::uint32_t> label(n, 0);
  bool found = false;
  auto check = [&](std::uint32_t blocks) {
    if (blocks == 1 || blocks == n) return;
    std::vector<std::size_t> sizes(blocks, 0);
    for (auto l : label) ++sizes[l];
    for (auto s : sizes)
      if (s != sizes[0]) return;
    for (const auto& g : gens) {
      std::map<std::uint32_t, std::uint32_t> image_block;
      for (std::size_t x = 0; x < n; ++x) {
        auto [it, inserted] = image_block.emplace(label[x], label[g[x]]);
        if (!inserted && it->second != label[g[x]]) return;
      }
    }
    found = true;
  };
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t used) -> void {
    if (found) return;
    if (i == n) {
      check(used);
      return;
    }
    for (std::uint32_t l = 0; l <= used && l < n; ++l) {
      label[i] = l;
      self(self, i + 1, l == used ? used + 1 : used);
    }
  };
  label[0] = 0;
  rec(rec, 1, 1);
  return found;
}

}  // namespace oracle

namespace oracle {

struct SubgroupCensus {
  std::size_t subgroups = 0;
  std::size_t classes = 0;
  std::map<std::uint64_t, std::size_t> classes_by_order;
};

/// Every subgroup of S_n as a join of cyclic subgroups, closed by brute
/// force over a multiplication table, then grouped into conjugacy classes
/// with union-find under conjugation by (1,2) and (1,...,n).
inline SubgroupCensus subgroup_census(std::size_t n) {
  std::vector<Images> elems;
  Images p(n);
  std::iota(p.begin(), p.end(), 0u);
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t N = elems.size();
  std::map<Images, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i) index[elems[i]] = i;
  std::vector<std::size_t> table(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      Images c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = elems[a][elems[b][x]];
      table[a * N + b] = index[c];
    }

  using Set = std::vector<bool>;
  auto close = [&](std::vector<std::size_t> gens) {
    Set in(N, false);
    std::vector<std::size_t> queue{0};
    in[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto g : gens) {
        auto c = table[queue[i] * N + g];
        if (!in[c]) {
          in[c] = true;
          queue.push_back(c);
        }
      }
    return in;
  };

  std::vector<std::size_t> cyclic_gen;
  std::set<Set> cyclic_seen;
  for (std::size_t g = 1; g < N; ++g)
    if (cyclic_seen.insert(close({g})).second) cyclic_gen.push_back(g);

  std::map<Set, std::vector<std::size_t>> subgroups;  // set -> generators
  std::vector<Set> work{close({})};
  subgroups[work[0]] = {};
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Set s = work[i];
    const auto gens = subgroups[s];
    for (auto c : cyclic_gen) {
      if (s[c]) continue;
      auto g2 = gens;
      g2.push_back(c);
      Set joined = close(g2);
      if (!subgroups.count(joined)) {
        subgroups[joined] = g2;
        work.push_back(joined);
      }
    }
  }

  std::map<Set, std::size_t> id;
  for (const auto& [s, g] : subgroups) id.emplace(s, id.size());
  std::vector<std::size_t> parent(id.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Images t(n), cyc(n);
  std::iota(t.begin(), t.end(), 0u);
  if (n >= 2) std::swap(t[0], t[1]);
  for (std::size_t x = 0; x < n; ++x) cyc[x] = static_cast<std::uint32_t>((x + 1) % n);
  for (const auto& conj : {t, cyc}) {
    std::size_t c = index[conj], ci = 0;
    for (std::size_t i = 0; i < N; ++i)
      if (table[c * N + i] == 0) ci = i;
    for (const auto& [s, sid] : id) {
      Set image(N, false);
      for (std::size_t e = 0; e < N; ++e)
        if (s[e]) image[table[table[c * N + e] * N + ci]] = true;
      std::size_t a = find(sid), b = find(id.at(image));
      if (a != b) parent[a] = b;
    }
  }
  SubgroupCensus census;
  census.subgroups = id.size();
  for (const auto& [s, sid] : id)
    if (find(sid) == sid) {
      ++census.classes;
      ++census.classes_by_order[static_cast<std::uint64_t>(std::count(s.begin(), s.end(), true))];
    }
  return census;
}

}  // namespace oracle
