// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure. `acceptance N` runs criterion N alone.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "setorbits/catalog.hpp"
#include "setorbits/error.hpp"
#include "setorbits/orbitcount.hpp"
#include "setorbits/pipeline.hpp"
#include "setorbits/prune.hpp"
#include "setorbits/subgroups.hpp"

using namespace setorbits;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
    ++total_;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_ == 0) return {true, summary};
    std::string d = std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed:";
    for (const auto& f : failures_) d += " [" + f + "]";
    return {false, d};
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

const Catalog& catalog() {
  static const Catalog c = Catalog::load_default();
  return c;
}

std::filesystem::path table(std::size_t r) {
  return std::filesystem::path(SETORBITS_DATA_DIR) / "tables" / ("r" + std::to_string(r) + ".tsv");
}

const CatalogEntry& entry(const std::string& id) {
  if (const auto* e = catalog().find(id)) return *e;
  auto tagged = catalog().with_paper_id(id);
  if (tagged.empty()) throw std::runtime_error("no catalog entry for " + id);
  return *tagged.front();
}

std::string profile_text(const std::vector<std::uint64_t>& p) {
  std::string s;
  for (auto v : p) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// 1. Burnside agrees with 2^n enumeration for the catalog and all classes of S_n, n <= 6.
Outcome oracle_equivalence() {
  Check check;
  std::size_t groups = 0;
  auto compare = [&](const std::string& label, const PermGroup& g) {
    auto burnside = orbit_profile(g);
    auto direct = oracle::subset_profile(oracle::raw(g.generators()), g.degree());
    std::uint64_t total = 0;
    for (auto v : direct) total += v;
    check.expect(burnside.by_size == direct && burnside.total == total && count_set_orbits(g) == total,
                 label + ": " + profile_text(burnside.by_size) + " vs " + profile_text(direct));
    ++groups;
  };
  for (const auto& e : catalog().entries()) compare(e.id, e.build());
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& c : all_subgroups(n)) compare(c.label, c.representative);
  return check.outcome(std::to_string(groups) + " groups, profiles identical");
}

// 2. Named s-values from the published tables.
Outcome table_spot_values() {
  Check check;
  const std::vector<std::tuple<std::string, std::string, std::uint64_t>> rows{
      {"C4", "4T1", 6},         {"D8", "4T3", 6},           {"PSL(2,5)", "6P1", 8},    {"AGL(1,8)", "8P1", 10},
      {"AGammaL(1,8)", "8P2", 10}, {"PGL(2,7)", "8P5", 10},  {"ASL(3,2)", "8P3", 10},   {"M12", "12P2", 14},
      {"PSL(2,7)", "8P4", 11},  {"M11", "11P6", 14},        {"AGL(1,7)", "7P4", 10},   {"L(3,2)", "7P5", 10},
      {"PGL(2,9)", "10P4", 14}, {"PGammaL(2,9)", "10P7", 14}, {"C7:C3", "7P3", 12},     {"ASL(2,3)", "9P6", 14},
      {"AGL(2,3)", "9P7", 14},  {"M10", "10P6", 15},        {"M11 on 12", "12P1", 19}, {"PSL(2,11) on 12", "12T179", 22}};
  check.expect(count_set_orbits(PermGroup(2)) == 4, "trivial group on 2 points");
  check.expect(count_set_orbits(builtin(Family::cyclic, 4)) == 6, "builtin C4");
  check.expect(count_set_orbits(builtin(Family::dihedral, 4)) == 6, "builtin D8");
  for (const auto& [name, id, s] : rows) {
    const auto& e = entry(id);
    auto g = e.build();
    auto got = count_set_orbits(g);
    check.expect(got == s && g.order() == e.expected_order,
                 name + " (" + id + "): s=" + std::to_string(got) + ", expected " + std::to_string(s));
  }
  return check.outcome(std::to_string(rows.size() + 1) + " table values exact");
}

// 3. Survivor lists and the n = 24 Miller witness.
Outcome pruning_reproduction() {
  Check check;
  auto after_step1 = [](std::size_t r) {
    std::set<std::size_t> out;
    for (const auto& v : prune_report(r))
      if (v.stage == PruneStage::step2 || v.stage == PruneStage::survived) out.insert(v.n);
    return out;
  };
  auto after_step2 = [](std::size_t r) {
    auto s = survivors(prune_report(r));
    return std::set<std::size_t>(s.begin(), s.end());
  };
  check.expect(after_step1(2) == std::set<std::size_t>{2, 4, 6, 8, 10, 12, 14, 16, 24}, "r=2 after step 1");
  check.expect(after_step2(2) == std::set<std::size_t>{2, 4, 6, 8, 12}, "r=2 after step 2");
  check.expect(after_step2(3) == std::set<std::size_t>{3, 4, 5, 6, 7, 8, 9, 11, 12}, "r=3 after steps 1 and 2");
  auto m = miller_bound(24);
  check.expect(m && m->m == 1 && m->p0 == 19 && m->rem == 5 && to_string(*m) == "1x19+5", "miller_bound(24)");
  auto w = step2_eliminates(24, 2);
  check.expect(w && w->prime == 17, "step 2 witness for 24");
  return check.outcome("survivor sets exact, 24 = 1x19+5 with p=17");
}

// 4. k0 window opens at n = 81.
Outcome theorem_boundary() {
  Check check;
  for (std::size_t n = 1; n <= 80; ++n) check.expect(!thm37_max_k0(n), "k0 window at n=" + std::to_string(n));
  check.expect(thm37_max_k0(81) == 7u, "k0 at n=81");
  for (std::size_t r = 2; r <= 15; ++r) check.expect(degree_bound(r) == 81, "degree_bound(" + std::to_string(r) + ")");
  return check.outcome("empty for n <= 80, 7 at 81, bound 81 for r = 2..15");
}

// 5. Full tables for r = 2..5.
Outcome full_classification() {
  Check check;
  const std::map<std::size_t, std::size_t> sizes{{2, 9}, {3, 8}, {4, 10}, {5, 10}};
  auto start = Clock::now();
  std::string counts;
  for (auto [r, size] : sizes) {
    auto report = classify(r, catalog());
    auto diff = compare_to_golden(report, load_golden_file(table(r)));
    std::ostringstream d;
    write_diff(d, diff);
    check.expect(report.complete(), "r=" + std::to_string(r) + " incomplete");
    check.expect(diff.empty() && diff.uncovered.empty(), "r=" + std::to_string(r) + " diff: " + d.str());
    check.expect(report.rows.size() == size, "r=" + std::to_string(r) + " rows " + std::to_string(report.rows.size()));
    counts += (counts.empty() ? "" : ",") + std::to_string(report.rows.size());
  }
  std::chrono::duration<double> took = Clock::now() - start;
  check.expect(took.count() < 600, "runtime " + std::to_string(took.count()) + "s");
  std::ostringstream summary;
  summary << "rows " << counts << ", empty diffs, " << std::fixed << std::setprecision(2) << took.count() << "s";
  return check.outcome(summary.str());
}

// 6. r = 6..11: covered degrees match, catalogued rows recomputed, the rest reported.
Outcome partial_tables() {
  Check check;
  ClassifyOptions options;
  options.allow_partial = true;
  std::size_t reproduced = 0, out_of_cap = 0, gap = 0, covered = 0;
  std::map<std::string, std::uint64_t> named;
  for (std::size_t r = 6; r <= 11; ++r) {
    auto report = classify(r, catalog(), options);
    auto golden = load_golden_file(table(r));
    check_golden_spots(report, golden, catalog(), options);
    auto diff = compare_to_golden(report, golden);
    const std::string tag = "r=" + std::to_string(r);
    check.expect(diff.empty(), tag + " covered degrees differ");
    check.expect(diff.uncovered.size() == report.spot_checks.size(), tag + " uncovered rows not all reported");
    covered += golden.size() - diff.uncovered.size();
    for (const auto& row : report.rows) named[row.label] = row.s;
    for (const auto& spot : report.spot_checks) {
      check.expect(spot.status != SpotCheck::Status::mismatch, tag + " " + spot.golden.label + " mismatch");
      if (!spot.catalog_id.empty())
        check.expect(spot.status == SpotCheck::Status::reproduced, tag + " " + spot.golden.label);
      if (spot.golden.degree >= 9 && spot.catalog_id.empty())
        check.expect(spot.status == SpotCheck::Status::out_of_cap, tag + " " + spot.golden.label + " not out-of-cap");
      switch (spot.status) {
        case SpotCheck::Status::reproduced:
          ++reproduced;
          if (spot.computed_s) named[spot.golden.label] = *spot.computed_s;
          break;
        case SpotCheck::Status::out_of_cap: ++out_of_cap; break;
        case SpotCheck::Status::data_gap: ++gap; break;
        case SpotCheck::Status::mismatch: break;
      }
    }
  }
  check.expect(named["12P1"] == 19, "12P1 s=19");
  check.expect(named["12T179"] == 22, "12T179 s=22");
  return check.outcome(std::to_string(covered) + " rows in covered degrees, " + std::to_string(reproduced) +
                       " catalogued rows reproduced, " + std::to_string(out_of_cap) + " out-of-cap, " +
                       std::to_string(gap) + " data-gap");
}

// 7. Structural invariants on random subgroups of S_n, n <= 8.
Outcome invariant_suites() {
  Check check;
  std::mt19937_64 rng(20191);
  std::uniform_int_distribution<std::size_t> degree(2, 8);
  auto random_perm = [&](std::size_t n) {
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    std::shuffle(p.begin(), p.end(), rng);
    return Permutation(std::move(p));
  };
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = degree(rng);
    PermGroup g(n, {random_perm(n), random_perm(n)});
    PermGroup h(n, {g.generators().front()});
    const std::string tag = "#" + std::to_string(i) + " n=" + std::to_string(n) + " " +
                            format_generators(g.generators());
    auto p = orbit_profile(g);
    auto q = orbit_profile(h);
    const std::uint64_t order = g.order();
    check.expect(p.by_size == oracle::subset_profile(oracle::raw(g.generators()), n), tag + " oracle");
    for (std::size_t t = 0; t <= n; ++t) {
      check.expect(p.by_size[t] == p.by_size[n - t], tag + " symmetry");
      check.expect(q.by_size[t] >= p.by_size[t], tag + " refinement");
    }
    for (std::size_t t = 1; t <= n / 2; ++t) check.expect(p.by_size[t - 1] <= p.by_size[t], tag + " monotone");
    check.expect(p.total >= n + 1 && p.total * order >= (std::uint64_t{1} << n), tag + " lower bound");
    auto sums = burnside_sums(g);
    check.expect(sums.total % order == 0, tag + " total divisibility");
    for (auto v : sums.numerator) check.expect(v % order == 0, tag + " numerator divisibility");
    const std::size_t k = transitivity_degree(g);
    for (std::size_t u = 0; u <= std::min(k, n); ++u) check.expect(p.by_size[u] == 1, tag + " k-transitive bridge");
  }
  return check.outcome("200 random groups, all invariants hold");
}

// 8. Class counts: S_3, S_4 known; S_5, S_6 frozen from the naive census.
Outcome subgroup_counts() {
  Check check;
  const std::map<std::size_t, std::size_t> frozen{{3, 4}, {4, 11}, {5, 19}, {6, 56}};
  std::string got;
  for (auto [n, count] : frozen) {
    auto size = all_subgroups(n).size();
    check.expect(size == count, "S_" + std::to_string(n) + ": " + std::to_string(size));
    got += (got.empty() ? "" : ",") + std::to_string(size);
  }
  return check.outcome("S3..S6 classes " + got);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"table spot values", table_spot_values},
      {"pruning reproduction", pruning_reproduction},
      {"k0 boundary", theorem_boundary},
      {"full classification r=2..5", full_classification},
      {"partial r=6..11 checks", partial_tables},
      {"invariant suites", invariant_suites},
      {"subgroup enumeration counts", subgroup_counts},
  };
  std::size_t first = 0, last = criteria.size();
  if (argc > 1) {
    first = std::strtoul(argv[1], nullptr, 10) - 1;
    if (first >= criteria.size()) {
      std::cerr << "criterion must be 1.." << criteria.size() << '\n';
      return 2;
    }
    last = first + 1;
  }
  bool all = true;
  for (std::size_t i = first; i < last; ++i) {
    Outcome o;
    auto start = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::chrono::duration<double> took = Clock::now() - start;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << " [" << std::fixed << std::setprecision(2) << took.count() << "s]\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
