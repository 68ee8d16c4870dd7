#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "setorbits/error.hpp"
#include "setorbits/group.hpp"

using namespace setorbits;

namespace {

PermGroup group(std::size_t n, const char* gens) { return PermGroup(n, parse_generators(gens, n)); }

const char* kM12 = "(1,2,3,4,5,6,7,8,9,10,11);(3,7,11,8)(4,10,5,6);(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)";
const char* kPSL25 = "(1,2,3,4,5);(1,6)(2,5);(2,5)(3,4)";

std::string symmetric_gens(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
  return "(1,2);" + cycle;
}

std::string alternating_gens(std::size_t n) {
  std::string out;
  for (std::size_t i = 3; i <= n; ++i) out += (i > 3 ? ";" : "") + std::string("(1,2,") + std::to_string(i) + ")";
  return out;
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

}  // namespace

TEST(Order, Examples) {
  EXPECT_EQ(group(4, "(1,2);(1,2,3,4)").order(), 24u);
  EXPECT_EQ(group(12, kM12).order(), 95040u);
  EXPECT_EQ(group(6, kPSL25).order(), 60u);
  EXPECT_EQ(PermGroup(5).order(), 1u);
  EXPECT_EQ(group(12, symmetric_gens(12).c_str()).order(), 479001600u);
}

TEST(Order, GeneratorDegreeMismatch) {
  EXPECT_THROW(PermGroup(4, {Permutation(3)}), Error);
}

TEST(Order, MatchesNaiveClosureOnRandomGroups) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 2 + i % 7;
    std::vector<Permutation> gens{random_perm(n, rng)};
    if (i % 3) gens.push_back(random_perm(n, rng));
    PermGroup g(n, gens);
    auto naive = oracle::closure(oracle::raw(gens), n);
    EXPECT_EQ(g.order(), naive.size());
    EXPECT_EQ(factorial(n) % g.order(), 0u);
  }
}

TEST(Elements, TrivialAndCyclic) {
  auto triv = PermGroup(2).elements();
  ASSERT_EQ(triv.size(), 1u);
  EXPECT_TRUE(triv[0].is_identity());

  std::multiset<std::vector<std::size_t>> types;
  for (const auto& e : group(4, "(1,2,3,4)").elements()) types.insert(cycle_type(e).lengths);
  std::multiset<std::vector<std::size_t>> want{{1, 1, 1, 1}, {4}, {4}, {2, 2}};
  EXPECT_EQ(types, want);
}

TEST(Elements, DistinctMembersOfS4) {
  PermGroup s4 = group(4, "(1,2);(1,2,3,4)");
  auto els = s4.elements();
  std::set<Permutation> distinct(els.begin(), els.end());
  EXPECT_EQ(distinct.size(), 24u);
}

TEST(Elements, IterationEqualsClosure) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 3 + i % 6;
    std::vector<Permutation> gens{random_perm(n, rng), random_perm(n, rng)};
    PermGroup g(n, gens);
    std::set<oracle::Images> seen;
    std::size_t count = 0;
    g.for_each_element([&](std::span<const Point> img) {
      seen.emplace(img.begin(), img.end());
      ++count;
      EXPECT_TRUE(g.contains(Permutation(std::vector<Point>(img.begin(), img.end()))));
    });
    EXPECT_EQ(count, g.order());
    EXPECT_EQ(seen, oracle::closure(oracle::raw(gens), n));
  }
}

TEST(Elements, BlocksPartitionTheGroup) {
  PermGroup m12 = group(12, kM12);
  std::size_t total = 0;
  for (std::size_t b = 0; b < m12.block_count(); ++b)
    m12.for_each_element_in_block(b, b + 1, [&](std::span<const Point>) { ++total; });
  EXPECT_EQ(total, 95040u);
}

TEST(Elements, CapExceeded) {
  PermGroup s8 = group(8, symmetric_gens(8).c_str());
  try {
    s8.for_each_element([](std::span<const Point>) {}, 1000);
    FAIL() << "expected cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    EXPECT_NE(std::string(e.what()).find("group too large for element iteration"), std::string::npos);
  }
}

TEST(Membership, Basics) {
  PermGroup a5 = group(5, alternating_gens(5).c_str());
  EXPECT_TRUE(a5.contains(parse_permutation("(1,2,3)", 5)));
  EXPECT_TRUE(a5.contains(parse_permutation("(1,2)(3,4)", 5)));
  EXPECT_FALSE(a5.contains(parse_permutation("(1,2)", 5)));
  EXPECT_TRUE(a5.contains(Permutation(5)));
}

TEST(Transitivity, Examples) {
  EXPECT_TRUE(is_transitive(group(4, "(1,2,3,4)")));
  EXPECT_FALSE(is_transitive(PermGroup(2)));
  EXPECT_FALSE(is_transitive(group(4, "(1,2,3)")));
  auto orbits = point_orbits(group(5, "(1,3);(2,5)"));
  EXPECT_EQ(orbits, (std::vector<std::vector<Point>>{{0, 2}, {1, 4}, {3}}));
}

TEST(Primitivity, Examples) {
  EXPECT_FALSE(is_primitive(group(4, "(1,2,3,4)")));
  EXPECT_EQ(minimal_block(group(4, "(1,2,3,4)"), 0, 2), (std::vector<Point>{0, 2}));
  EXPECT_TRUE(is_primitive(group(5, symmetric_gens(5).c_str())));
  EXPECT_TRUE(is_primitive(group(6, kPSL25)));
  EXPECT_FALSE(is_primitive(PermGroup(3)));
}

TEST(Primitivity, C4HasBlockSystemByExhaustiveSearch) {
  EXPECT_TRUE(oracle::has_nontrivial_block_system({{1, 2, 3, 0}}, 4));
}

TEST(Primitivity, AgreesWithExhaustiveBlockSearch) {
  std::mt19937_64 rng(17);
  int primitive_seen = 0, imprimitive_seen = 0;
  for (int i = 0; i < 400; ++i) {
    std::size_t n = 2 + i % 7;
    std::vector<Permutation> gens{random_perm(n, rng)};
    if (i % 4) gens.push_back(random_perm(n, rng));
    PermGroup g(n, gens);
    if (!is_transitive(g)) {
      EXPECT_FALSE(is_primitive(g));
      continue;
    }
    bool oracle_primitive = !oracle::has_nontrivial_block_system(oracle::raw(gens), n);
    EXPECT_EQ(is_primitive(g), oracle_primitive) << format_generators(gens);
    (oracle_primitive ? primitive_seen : imprimitive_seen)++;
  }
  EXPECT_GT(primitive_seen, 0);
  EXPECT_GT(imprimitive_seen, 0);
}

TEST(TransitivityDegree, Examples) {
  EXPECT_EQ(transitivity_degree(PermGroup(2)), 0u);
  EXPECT_EQ(transitivity_degree(PermGroup(7)), 0u);
  EXPECT_EQ(transitivity_degree(group(4, "(1,2);(1,2,3,4)")), 4u);
  EXPECT_EQ(transitivity_degree(group(12, kM12)), 5u);
  EXPECT_EQ(transitivity_degree(group(4, "(1,2,3,4)")), 1u);
  EXPECT_EQ(transitivity_degree(group(6, kPSL25)), 2u);
}

TEST(TransitivityDegree, SymmetricAndAlternating) {
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(transitivity_degree(group(n, symmetric_gens(n).c_str())), n);
  for (std::size_t n = 3; n <= 8; ++n)
    EXPECT_EQ(transitivity_degree(group(n, alternating_gens(n).c_str())), n - 2) << n;
}

TEST(TransitivityDegree, M12ChainOrbitSizes) {
  const auto& chain = group(12, kM12).chain();
  ASSERT_GE(chain.size(), 5u);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(chain[j].orbit.size(), 12 - j);
  EXPECT_EQ(chain.size(), 5u);
}

TEST(ContainsAlternating, Detection) {
  EXPECT_TRUE(contains_alternating(group(7, symmetric_gens(7).c_str())));
  EXPECT_TRUE(contains_alternating(group(7, alternating_gens(7).c_str())));
  EXPECT_FALSE(contains_alternating(group(12, kM12)));
  EXPECT_TRUE(contains_alternating(group(25, symmetric_gens(25).c_str())));
  EXPECT_TRUE(contains_alternating(group(25, alternating_gens(25).c_str())));
  EXPECT_FALSE(contains_alternating(group(25, "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25)")));
}
