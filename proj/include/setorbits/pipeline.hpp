#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setorbits/catalog.hpp"
#include "setorbits/orbitcount.hpp"
#include "setorbits/prune.hpp"
#include "setorbits/subgroups.hpp"

namespace setorbits {

/// Largest t with s_t(G) = 1 forced by s(G) = n + r, or nullopt when no
/// t >= 1 is forced. Throws out_of_range for r < 2.
std::optional<std::size_t> forced_transitive_size(std::size_t n, std::size_t r);

enum class CandidateSource {
  primitive_catalog,     // primitive entries with C(n, t*) | order
  transitive_subgroups,  // transitive classes of S_n
  transitive_catalog,    // transitive entries, degree with a complete list
  all_subgroups,         // every class of S_n
};

std::string_view to_string(CandidateSource source);

enum class Coverage { complete, out_of_cap, data_gap };

std::string_view to_string(Coverage coverage);

/// Where the candidates for one degree come from, and whether the data for
/// it is available under the given subgroup cap.
struct CandidatePlan {
  std::size_t degree = 0;
  std::optional<std::size_t> t;
  CandidateSource source = CandidateSource::all_subgroups;
  Coverage coverage = Coverage::complete;
  std::string gap;  // empty when complete
};

CandidatePlan plan_candidates(std::size_t n, std::size_t r, const Catalog& catalog,
                              const SubgroupOptions& subgroups = {});

struct Candidate {
  std::string label;  // catalog id or S<n>#i
  std::string name;
  PermGroup group{1};
};

/// Candidates for one surviving degree, never containing A_n (n >= 3).
/// Throws data_gap when the plan is not complete.
std::vector<Candidate> candidate_groups(std::size_t n, std::size_t r, const Catalog& catalog,
                                        const SubgroupOptions& subgroups = {});

struct ClassificationRow {
  std::size_t r = 0;
  std::size_t degree = 0;
  std::string label;
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t s = 0;

  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

struct DegreeCoverage {
  CandidatePlan plan;
  std::size_t candidates = 0;
};

/// A golden row checked on its own because its degree is not covered.
struct SpotCheck {
  enum class Status { reproduced, mismatch, out_of_cap, data_gap };

  ClassificationRow golden;
  Status status = Status::data_gap;
  std::string catalog_id;
  std::optional<std::uint64_t> computed_s;
  std::string detail;
};

std::string_view to_string(SpotCheck::Status status);

struct RunReport {
  std::size_t r = 0;
  std::vector<PruneVerdict> verdicts;
  std::vector<DegreeCoverage> degrees;  // one per surviving degree
  std::vector<ClassificationRow> rows;  // covered degrees only
  std::vector<SpotCheck> spot_checks;
  std::map<std::string, std::chrono::duration<double>> timing;

  bool complete() const;
  std::vector<std::size_t> gap_degrees() const;
};

struct ClassifyOptions {
  SubgroupOptions subgroups;
  CountOptions counting;
  unsigned jobs = 1;
  /// Report uncovered degrees instead of throwing data_gap.
  bool allow_partial = false;
};

/// Runs pruning, candidate selection and counting for one r in 2..11.
/// Rows are sorted by (degree, order, label).
RunReport classify(std::size_t r, const Catalog& catalog, const ClassifyOptions& options = {});

/// Fills report.spot_checks: each golden row in an uncovered degree is
/// recomputed through its `paper:<label>` catalog entry when one exists.
void check_golden_spots(RunReport& report, const std::vector<ClassificationRow>& golden,
                        const Catalog& catalog, const ClassifyOptions& options = {});

/// Tab-separated `r degree label name order s`; `#` lines are comments.
std::vector<ClassificationRow> load_golden(std::istream& in, std::string_view source = "golden");
std::vector<ClassificationRow> load_golden_file(const std::filesystem::path& path);

void write_tsv(std::ostream& out, const std::vector<ClassificationRow>& rows);
void write_pretty(std::ostream& out, const std::vector<ClassificationRow>& rows);

struct GoldenDiff {
  std::vector<ClassificationRow> missing;  // golden rows with no computed match
  std::vector<ClassificationRow> extra;    // computed rows with no golden match
  /// (degree, order, s) keys shared by more than one row; informational.
  std::vector<ClassificationRow> ambiguous;
  /// Golden rows skipped because their degree is not covered.
  std::vector<ClassificationRow> uncovered;

  bool empty() const { return missing.empty() && extra.empty(); }
};

/// Multiset match on (degree, order, s). Golden rows in gap degrees go to
/// `uncovered` instead of `missing`.
GoldenDiff compare_to_golden(const RunReport& report, const std::vector<ClassificationRow>& golden);

void write_diff(std::ostream& out, const GoldenDiff& diff);

}  // namespace setorbits
