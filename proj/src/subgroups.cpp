#include "setorbits/subgroups.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "setorbits/error.hpp"

namespace setorbits {

namespace {

constexpr std::size_t kMax = kMaxSubgroupDegree;
using Img = std::array<std::uint8_t, kMax>;

Img to_img(std::span<const Point> p) {
  Img out{};
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = static_cast<std::uint8_t>(p[i]);
  return out;
}

Permutation to_perm(const Img& x, std::size_t n) { return Permutation(std::vector<Point>(x.begin(), x.begin() + n)); }

Img identity_img(std::size_t n) {
  Img out{};
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(i);
  return out;
}

// (a * b)[x] = a[b[x]]
Img mul(const Img& a, const Img& b, std::size_t n) {
  Img out{};
  for (std::size_t i = 0; i < n; ++i) out[i] = a[b[i]];
  return out;
}

Img inv(const Img& a, std::size_t n) {
  Img out{};
  for (std::size_t i = 0; i < n; ++i) out[a[i]] = static_cast<std::uint8_t>(i);
  return out;
}

// Sorted cycle lengths packed four bits apiece.
std::uint32_t cycle_code(const Img& p, std::size_t n) {
  std::array<std::uint8_t, kMax> lens{};
  std::size_t count = 0;
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen >> i & 1) continue;
    std::uint8_t len = 0;
    for (std::size_t j = i; !(seen >> j & 1); j = p[j]) {
      seen |= 1u << j;
      ++len;
    }
    lens[count++] = len;
  }
  std::sort(lens.begin(), lens.begin() + count);
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < count; ++i) code = code << 4 | lens[i];
  return code;
}

// All of S_n in lexicographic order, with the matching ranking function.
struct SymmetricTable {
  std::size_t n;
  std::vector<Img> perms;

  explicit SymmetricTable(std::size_t degree) : n(degree) {
    Img p = identity_img(n);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.begin() + n));
  }

  std::uint32_t rank(const Img& p) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t smaller = 0;
      for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
      r = r * static_cast<std::uint32_t>(n - i) + smaller;
    }
    return r;
  }
};

std::vector<std::size_t> orbit_size_of_point(const std::vector<Img>& gens, std::size_t n) {
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  for (const auto& g : gens)
    for (std::size_t x = 0; x < n; ++x) {
      auto a = find(x), b = find(g[x]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> size(n, 0), out(n);
  for (std::size_t x = 0; x < n; ++x) ++size[find(x)];
  for (std::size_t x = 0; x < n; ++x) out[x] = size[find(x)];
  return out;
}

// Elements of B grouped by cycle type, plus point-orbit sizes.
struct Target {
  std::size_t n = 0;
  std::vector<Img> elements;
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_type;
  std::vector<std::size_t> orbit_size;

  Target(std::size_t degree, std::vector<Img> els, const std::vector<Img>& gens)
      : n(degree), elements(std::move(els)), orbit_size(orbit_size_of_point(gens, degree)) {
    for (std::uint32_t i = 0; i < elements.size(); ++i) by_type[cycle_code(elements[i], n)].push_back(i);
  }
};

// Calls found(x) for every x with x a x^-1 in B for all generators a, until
// it returns false. Generators must be non-identity.
void conjugator_search(const std::vector<Img>& a_gens, const Target& b, std::size_t n,
                       const std::function<bool(const Img&)>& found) {
  const std::size_t k = a_gens.size();
  const auto a_orbit = orbit_size_of_point(a_gens, n);
  std::vector<Img> a_inv;
  for (const auto& a : a_gens) a_inv.push_back(inv(a, n));

  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = true;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (const auto& a : a_gens)
        if (!placed[a[order[i]]]) {
          placed[a[order[i]]] = true;
          order.push_back(a[order[i]]);
        }
  }

  std::vector<std::vector<std::uint32_t>> start(k);
  for (std::size_t g = 0; g < k; ++g) {
    auto it = b.by_type.find(cycle_code(a_gens[g], n));
    if (it == b.by_type.end()) return;
    start[g] = it->second;
  }

  Img x{};
  std::array<int, kMax> assigned;
  assigned.fill(-1);
  std::uint32_t used = 0;
  bool stop = false;

  std::function<void(std::size_t, const std::vector<std::vector<std::uint32_t>>&)> rec =
      [&](std::size_t depth, const std::vector<std::vector<std::uint32_t>>& lists) {
        if (depth == n) {
          for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(assigned[i]);
          if (!found(x)) stop = true;
          return;
        }
        const std::size_t i = order[depth];
        std::vector<std::vector<std::uint32_t>> next(k);
        for (std::size_t j = 0; j < n && !stop; ++j) {
          if (used >> j & 1 || b.orbit_size[j] != a_orbit[i]) continue;
          assigned[i] = static_cast<int>(j);
          bool ok = true;
          for (std::size_t g = 0; g < k && ok; ++g) {
            const int fwd = assigned[a_gens[g][i]];   // x(a(i)), needs b(j) = x(a(i))
            const int back = assigned[a_inv[g][i]];   // x(a^-1(i)), needs b(x(a^-1(i))) = j
            next[g].clear();
            for (std::uint32_t idx : lists[g]) {
              const Img& e = b.elements[idx];
              if (fwd >= 0 && e[j] != fwd) continue;
              if (back >= 0 && e[back] != static_cast<int>(j)) continue;
              next[g].push_back(idx);
            }
            ok = !next[g].empty();
          }
          if (ok) {
            used |= 1u << j;
            rec(depth + 1, next);
            used &= ~(1u << j);
          }
          assigned[i] = -1;
        }
      };
  rec(0, start);
}

std::vector<Img> nontrivial_imgs(const PermGroup& g) {
  std::vector<Img> out;
  for (const auto& p : g.generators())
    if (!p.is_identity()) out.push_back(to_img(p.images()));
  return out;
}

std::vector<Img> element_imgs(const PermGroup& g) {
  std::vector<Img> out;
  out.reserve(g.order());
  g.for_each_element([&](std::span<const Point> p) { out.push_back(to_img(p)); }, UINT64_MAX);
  return out;
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> t(n), c(n);
    std::iota(t.begin(), t.end(), Point{0});
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
    gens = {Permutation(t), Permutation(c)};
  }
  return PermGroup(n, gens);
}

PermGroup group_from_elements(std::size_t n, const std::vector<Img>& elements, std::uint64_t order) {
  std::vector<Permutation> gens;
  PermGroup g(n);
  for (const auto& e : elements) {
    if (g.order() == order) break;
    Permutation p = to_perm(e, n);
    if (g.contains(p)) continue;
    gens.push_back(p);
    g = PermGroup(n, gens);
  }
  return g;
}

struct WorkClass {
  std::vector<Img> gens;
  PermGroup group{1};
  std::uint64_t order = 0;
  SubgroupFingerprint key;
  std::optional<Target> target;  // absent for A_n and S_n
  PermGroup normalizer{1};
};

SubgroupFingerprint fingerprint_from(std::uint64_t order, const PermGroup& g, const std::vector<Img>& elements) {
  SubgroupFingerprint key;
  key.order = order;
  for (const auto& o : point_orbits(g)) key.orbit_sizes.push_back(o.size());
  std::sort(key.orbit_sizes.begin(), key.orbit_sizes.end());
  std::map<std::vector<std::size_t>, std::uint64_t> hist;
  for (const auto& e : elements) ++hist[cycle_type(to_perm(e, g.degree())).lengths];
  key.cycle_types.assign(hist.begin(), hist.end());
  return key;
}

std::vector<SubgroupClass> enumerate(std::size_t n) {
  const SymmetricTable table(n);
  const std::uint64_t full = table.perms.size();
  std::vector<WorkClass> classes;
  std::map<SubgroupFingerprint, std::vector<std::size_t>> buckets;
  std::optional<std::size_t> symmetric_idx, alternating_idx;

  auto add_class = [&](std::vector<Img> gens, PermGroup group, std::vector<Img> elements, bool large) {
    WorkClass c;
    c.gens = std::move(gens);
    c.order = group.order();
    c.key = fingerprint_from(c.order, group, elements);
    if (large) {
      c.normalizer = symmetric_group(n);
    } else {
      c.target.emplace(n, std::move(elements), c.gens);
      std::vector<Img> normalizing;
      if (c.gens.empty()) {
        c.normalizer = symmetric_group(n);
      } else {
        conjugator_search(c.gens, *c.target, n, [&](const Img& x) {
          normalizing.push_back(x);
          return true;
        });
        c.normalizer = group_from_elements(n, normalizing, normalizing.size());
      }
    }
    c.group = std::move(group);
    buckets[c.key].push_back(classes.size());
    classes.push_back(std::move(c));
    return classes.size() - 1;
  };

  add_class({}, PermGroup(n), {identity_img(n)}, false);

  std::vector<std::uint32_t> parent(full);
  std::vector<bool> in_h(full), root_seen(full);
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    if (classes[ci].order == full || (n >= 3 && classes[ci].order * 2 == full)) continue;
    const std::vector<Img> h_gens = classes[ci].gens;
    std::vector<Img> maps_left = h_gens;
    std::vector<std::pair<Img, Img>> conj;
    for (const auto& m : nontrivial_imgs(classes[ci].normalizer)) conj.emplace_back(m, inv(m, n));

    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (std::uint32_t e = 0; e < full; ++e) {
      const Img& p = table.perms[e];
      for (const auto& h : h_gens) {
        unite(e, table.rank(mul(h, p, n)));
        unite(e, table.rank(mul(p, h, n)));
      }
      for (const auto& [m, mi] : conj) unite(e, table.rank(mul(mul(m, p, n), mi, n)));
    }
    std::fill(in_h.begin(), in_h.end(), false);
    for (const auto& e : classes[ci].target->elements) in_h[table.rank(e)] = true;
    std::fill(root_seen.begin(), root_seen.end(), false);

    for (std::uint32_t e = 0; e < full; ++e) {
      std::uint32_t r = find(e);
      if (root_seen[r]) continue;
      root_seen[r] = true;
      if (in_h[e]) continue;
      std::vector<Img> gens = h_gens;
      gens.push_back(table.perms[e]);
      std::vector<Permutation> perms;
      for (const auto& g : gens) perms.push_back(to_perm(g, n));
      PermGroup k(n, perms);
      const std::uint64_t order = k.order();
      if (order == full || order * 2 == full) {
        auto& slot = order == full ? symmetric_idx : alternating_idx;
        if (!slot) slot = add_class(gens, std::move(k), element_imgs(PermGroup(n, perms)), true);
        continue;
      }
      std::vector<Img> elements = element_imgs(k);
      SubgroupFingerprint key = fingerprint_from(order, k, elements);
      bool known = false;
      if (auto it = buckets.find(key); it != buckets.end())
        for (std::size_t other : it->second) {
          conjugator_search(gens, *classes[other].target, n, [&](const Img&) {
            known = true;
            return false;
          });
          if (known) break;
        }
      if (!known) add_class(std::move(gens), std::move(k), std::move(elements), false);
    }
  }

  std::vector<std::size_t> idx(classes.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(classes[a].order, classes[a].key) < std::tie(classes[b].order, classes[b].key);
  });
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    WorkClass& c = classes[idx[i]];
    SubgroupClass s;
    s.label = "S" + std::to_string(n) + "#" + std::to_string(i + 1);
    s.order = c.order;
    s.normalizer_order = c.normalizer.order();
    s.class_size = full / s.normalizer_order;
    s.transitive = is_transitive(c.group);
    s.key = std::move(c.key);
    s.representative = std::move(c.group);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

SubgroupFingerprint fingerprint(const PermGroup& group) {
  std::vector<Img> elements;
  if (group.degree() <= kMax) {
    elements = element_imgs(group);
    return fingerprint_from(group.order(), group, elements);
  }
  throw Error(ErrorKind::out_of_range, "fingerprints are limited to degree " + std::to_string(kMax));
}

const std::vector<SubgroupClass>& all_subgroups(std::size_t n, const SubgroupOptions& options) {
  if (n == 0) throw Error(ErrorKind::out_of_range, "degree must be positive");
  if (n > options.cap || n > kMaxSubgroupDegree)
    throw Error(ErrorKind::cap_exceeded,
                "subgroup enumeration of S_" + std::to_string(n) + " exceeds the cap (" +
                    std::to_string(std::min(options.cap, kMaxSubgroupDegree)) + ")");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<SubgroupClass>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate(n)).first;
  return it->second;
}

std::vector<const SubgroupClass*> transitive_classes(std::size_t n, const SubgroupOptions& options) {
  std::vector<const SubgroupClass*> out;
  for (const auto& c : all_subgroups(n, options))
    if (c.transitive) out.push_back(&c);
  return out;
}

std::optional<Permutation> conjugate_in_sn(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree();
  if (b.degree() != n) throw Error(ErrorKind::degree_mismatch, "groups act on different degrees");
  if (n > kMax) throw Error(ErrorKind::out_of_range, "conjugacy search is limited to degree " + std::to_string(kMax));
  if (a.order() != b.order()) return std::nullopt;
  auto a_gens = nontrivial_imgs(a);
  if (a_gens.empty()) return Permutation(n);
  Target target(n, element_imgs(b), nontrivial_imgs(b));
  std::optional<Permutation> out;
  conjugator_search(a_gens, target, n, [&](const Img& x) {
    out = to_perm(x, n);
    return false;
  });
  return out;
}

PermGroup normalizer_in_sn(const PermGroup& h) {
  const std::size_t n = h.degree();
  if (n > kMax) throw Error(ErrorKind::out_of_range, "normalizers are limited to degree " + std::to_string(kMax));
  auto gens = nontrivial_imgs(h);
  if (gens.empty() || contains_alternating(h)) return symmetric_group(n);
  Target target(n, element_imgs(h), gens);
  std::vector<Img> found;
  conjugator_search(gens, target, n, [&](const Img& x) {
    found.push_back(x);
    return true;
  });
  return group_from_elements(n, found, found.size());
}

}  // namespace setorbits
