#include "setorbits/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "setorbits/error.hpp"

namespace setorbits {

namespace {

bool mul_checked(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

PermGroup::PermGroup(std::size_t degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0) throw Error(ErrorKind::out_of_range, "group degree must be positive");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw Error(ErrorKind::degree_mismatch,
                  "generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                      ", expected " + std::to_string(degree_));
  build();
}

void PermGroup::recompute_orbit(std::size_t level) {
  ChainLevel& L = levels_[level];
  L.orbit.assign(1, L.base);
  L.transversal.assign(1, Permutation(degree_));
  L.inverse_transversal.assign(1, Permutation(degree_));
  L.orbit_index.assign(degree_, -1);
  L.orbit_index[L.base] = 0;
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    for (const auto& s : L.strong_generators) {
      Point next = s[L.orbit[i]];
      if (L.orbit_index[next] >= 0) continue;
      L.orbit_index[next] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(next);
      L.transversal.push_back(compose(s, L.transversal[i]));
      L.inverse_transversal.push_back(inverse(L.transversal.back()));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const ChainLevel& L = levels_[l];
    std::int32_t idx = L.orbit_index[g[L.base]];
    if (idx < 0) return {std::move(g), l};
    g = compose(L.inverse_transversal[idx], g);
  }
  return {std::move(g), levels_.size()};
}

// Every point but the last is a base point while building; levels whose
// orbit is trivial are dropped once the chain is complete.
void PermGroup::build() {
  const std::size_t full = degree_ - 1;
  levels_.assign(full, ChainLevel{});
  for (std::size_t l = 0; l < full; ++l) levels_[l].base = static_cast<Point>(l);
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    Point m = g.first_moved_point();
    for (std::size_t l = 0; l <= m && l < full; ++l) {
      auto& sg = levels_[l].strong_generators;
      if (std::find(sg.begin(), sg.end(), g) == sg.end()) sg.push_back(g);
    }
  }
  for (std::size_t l = 0; l < full; ++l) recompute_orbit(l);

  std::size_t i = full;
  while (i > 0) {
    const std::size_t lvl = i - 1;
    bool added = false;
    for (std::size_t oi = 0; !added && oi < levels_[lvl].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < levels_[lvl].strong_generators.size(); ++si) {
        const ChainLevel& L = levels_[lvl];
        const Permutation& s = L.strong_generators[si];
        Point image = s[L.orbit[oi]];
        Permutation h =
            compose(L.inverse_transversal[L.orbit_index[image]], compose(s, L.transversal[oi]));
        if (h.is_identity()) continue;
        auto [residue, j] = sift(std::move(h), lvl + 1);
        if (j == levels_.size()) continue;
        for (std::size_t l = lvl + 1; l <= j; ++l) {
          levels_[l].strong_generators.push_back(residue);
          recompute_orbit(l);
        }
        i = j + 1;
        added = true;
        break;
      }
    }
    if (!added) --i;
  }

  std::erase_if(levels_, [](const ChainLevel& L) { return L.orbit.size() == 1; });

  std::uint64_t order = 1;
  bool ok = true;
  for (const auto& L : levels_) ok = ok && mul_checked(order, L.orbit.size(), order);
  if (ok) order_ = order;
}

std::uint64_t PermGroup::order() const {
  if (!order_) throw Error(ErrorKind::overflow, "group order exceeds 64 bits");
  return *order_;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, j] = sift(g, 0);
  return j == levels_.size() && residue.is_identity();
}

std::size_t PermGroup::block_count() const noexcept {
  return levels_.empty() ? 1 : levels_.front().orbit.size();
}

void PermGroup::iterate(std::size_t first, std::size_t last,
                        const std::function<void(std::span<const Point>)>& visit) const {
  const std::size_t k = levels_.size();
  if (k == 0) {
    if (first == 0 && last > 0) {
      Permutation id(degree_);
      visit(id.images());
    }
    return;
  }
  last = std::min(last, levels_[0].orbit.size());
  if (first >= last) return;

  // prefix[l] = u_0 * ... * u_{l-1}; the element is prefix[k].
  std::vector<std::vector<Point>> prefix(k + 1, std::vector<Point>(degree_));
  std::iota(prefix[0].begin(), prefix[0].end(), Point{0});
  std::vector<std::size_t> index(k, 0);
  index[0] = first;
  auto extend = [&](std::size_t l) {
    const auto u = levels_[l].transversal[index[l]].images();
    const auto& p = prefix[l];
    auto& q = prefix[l + 1];
    for (std::size_t x = 0; x < degree_; ++x) q[x] = p[u[x]];
  };
  for (std::size_t l = 0; l < k; ++l) extend(l);

  while (true) {
    visit(prefix[k]);
    std::size_t l = k;
    while (l > 0) {
      --l;
      std::size_t limit = l == 0 ? last : levels_[l].orbit.size();
      if (++index[l] < limit) break;
      if (l == 0) return;
      index[l] = 0;
    }
    for (std::size_t m = l; m < k; ++m) extend(m);
  }
}

void PermGroup::for_each_element(const std::function<void(std::span<const Point>)>& visit,
                                 std::uint64_t cap) const {
  if (!order_ || *order_ > cap)
    throw Error(ErrorKind::cap_exceeded,
                "group too large for element iteration (order " +
                    (order_ ? std::to_string(*order_) : std::string(">2^64")) + ", cap " +
                    std::to_string(cap) + ")");
  iterate(0, block_count(), visit);
}

void PermGroup::for_each_element_in_block(
    std::size_t first, std::size_t last,
    const std::function<void(std::span<const Point>)>& visit) const {
  iterate(first, last, visit);
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  for_each_element(
      [&](std::span<const Point> img) { out.emplace_back(std::vector<Point>(img.begin(), img.end())); },
      cap);
  return out;
}

PermGroup build_group(std::vector<Permutation> gens) {
  if (gens.empty()) throw Error(ErrorKind::usage, "build_group needs at least one generator");
  std::size_t n = gens.front().degree();
  return PermGroup(n, std::move(gens));
}

std::vector<std::vector<Point>> point_orbits(const PermGroup& group) {
  const std::size_t n = group.degree();
  UnionFind uf(n);
  for (const auto& g : group.generators())
    for (Point x = 0; x < n; ++x) uf.unite(x, g[x]);
  std::vector<std::vector<Point>> by_root(n);
  for (Point x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<Point>> out;
  for (auto& o : by_root)
    if (!o.empty()) out.push_back(std::move(o));
  return out;
}

bool is_transitive(const PermGroup& group) {
  if (group.degree() == 1) return true;
  const auto& chain = group.chain();
  return !chain.empty() && chain.front().base == 0 && chain.front().orbit.size() == group.degree();
}

std::vector<Point> minimal_block(const PermGroup& group, Point a, Point b) {
  const std::size_t n = group.degree();
  UnionFind uf(n);
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : group.generators()) {
      Point gx = g[x], gy = g[y];
      if (uf.unite(gx, gy)) queue.emplace_back(gx, gy);
    }
  }
  std::vector<Point> block;
  Point root = uf.find(a);
  for (Point x = 0; x < n; ++x)
    if (uf.find(x) == root) block.push_back(x);
  return block;
}

bool is_primitive(const PermGroup& group) {
  if (!is_transitive(group)) return false;
  const std::size_t n = group.degree();
  for (Point b = 1; b < n; ++b)
    if (minimal_block(group, 0, b).size() < n) return false;
  return true;
}

std::size_t transitivity_degree(const PermGroup& group) {
  const std::size_t n = group.degree();
  const auto& chain = group.chain();
  std::size_t k = 0;
  while (k < chain.size() && chain[k].orbit.size() == n - k) ++k;
  if (k == chain.size() && k + 1 == n) ++k;
  return k;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    if (!mul_checked(f, i, f))
      throw Error(ErrorKind::overflow, std::to_string(n) + "! exceeds 64 bits");
  return f;
}

bool contains_alternating(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n <= 20) {
    std::uint64_t full = factorial(n);
    std::uint64_t order = group.order();
    return order == full || (n >= 3 && 2 * order == full);
  }
  // Index is an integer, so comparing logarithms against log 2 is exact enough.
  long double log_order = 0;
  for (const auto& L : group.chain()) log_order += std::log(static_cast<long double>(L.orbit.size()));
  long double log_index = std::lgamma(static_cast<long double>(n) + 1) - log_order;
  return log_index < std::log(2.0L) + 0.1L;
}

}  // namespace setorbits
