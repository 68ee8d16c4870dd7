#include "setorbits/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include "setorbits/catalog.hpp"
#include "setorbits/error.hpp"
#include "setorbits/orbitcount.hpp"
#include "setorbits/pipeline.hpp"
#include "setorbits/prune.hpp"
#include "setorbits/subgroups.hpp"

namespace setorbits::cli {

namespace {

struct Shared {
  unsigned jobs = 1;
  std::uint64_t element_cap = kDefaultElementCap;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  std::string catalog;

  CountOptions counting() const { return {element_cap, jobs}; }
  Catalog load_catalog() const {
    return catalog.empty() ? Catalog::load_default() : Catalog(load_catalog_file(catalog));
  }
};

std::size_t largest_point(std::string_view text) {
  std::size_t best = 0, cur = 0;
  bool in_number = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = cur * 10 + static_cast<std::size_t>(c - '0');
      in_number = true;
    } else {
      if (in_number) best = std::max(best, cur);
      cur = 0;
      in_number = false;
    }
  }
  return in_number ? std::max(best, cur) : best;
}

// gens:<cycles>, <family>:<n> or a catalog id.
PermGroup resolve_group(const std::string& spec, std::size_t degree, const Shared& shared) {
  if (spec.starts_with("gens:")) {
    std::string text = spec.substr(5);
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = text.substr(1, text.size() - 2);
    std::size_t n = degree ? degree : largest_point(text);
    if (n == 0) throw Error(ErrorKind::usage, "--degree is required when the generators move no point");
    return PermGroup(n, parse_generators(text, n));
  }
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    if (auto family = parse_family(spec.substr(0, colon))) {
      std::size_t n = largest_point(spec.substr(colon + 1));
      return builtin(*family, n);
    }
  }
  auto catalog = shared.load_catalog();
  if (const auto* e = catalog.find(spec)) return e->build();
  throw Error(ErrorKind::catalog, "unknown group \"" + spec + "\" (expected a catalog id, gens:... or family:n)");
}

int cmd_orbits(const std::string& spec, std::size_t degree, bool per_size, bool dump, const Shared& shared,
               std::ostream& out) {
  PermGroup g = resolve_group(spec, degree, shared);
  if (per_size) {
    auto profile = orbit_profile(g, shared.counting());
    for (auto v : profile.by_size) out << v << ' ';
    out << "| s=" << profile.total << '\n';
  } else {
    out << "s=" << count_set_orbits(g, shared.counting()) << '\n';
  }
  if (dump) {
    if (g.degree() > kMaxEnumerationDegree)
      throw Error(ErrorKind::cap_exceeded,
                  "--dump supports degree at most " + std::to_string(kMaxEnumerationDegree));
    out << format_orbit_dump(enumerate_set_orbits(g), g.degree());
  }
  return kSuccess;
}

int cmd_prune(std::size_t r, std::optional<std::size_t> max_degree, std::ostream& out) {
  for (const auto& v : prune_report(r, max_degree))
    out << v.n << '\t' << to_string(v.stage) << '\t' << v.witness_text() << '\n';
  return kSuccess;
}

int cmd_subgroups(std::size_t degree, bool transitive_only, const Shared& shared, std::ostream& out) {
  SubgroupOptions options{shared.subgroup_cap};
  const auto& classes = all_subgroups(degree, options);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (transitive_only && !c.transitive) continue;
    out << i + 1 << '\t' << c.order << '\t' << c.class_size << '\t' << (c.transitive ? "yes" : "no") << '\t'
        << count_set_orbits(c.representative, shared.counting()) << '\t'
        << format_generators(c.representative.generators()) << '\n';
  }
  return kSuccess;
}

int cmd_catalog_verify(const std::string& only, const Shared& shared, std::ostream& out) {
  Catalog catalog = shared.load_catalog();
  std::vector<const CatalogEntry*> entries;
  for (const auto& e : catalog.entries())
    if (only.empty() || e.id == only) entries.push_back(&e);
  if (entries.empty()) throw Error(ErrorKind::catalog, "no catalog entry \"" + only + "\"");

  std::vector<VerificationReport> reports(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
      reports[i] = verify_entry(*entries[i], {shared.element_cap, 1});
  };
  {
    std::vector<std::jthread> threads;
    for (unsigned j = 1; j < shared.jobs; ++j) threads.emplace_back(worker);
    worker();
  }
  bool ok = true;
  for (const auto& report : reports) {
    out << report.id << '\t' << (report.passed() ? "ok" : "FAIL");
    for (const auto& c : report.checks)
      if (!c.passed) out << '\t' << c.name << ": " << c.detail;
    out << '\n';
    ok = ok && report.passed();
  }
  if (only.empty())
    for (const auto& problem : catalog.manifest_problems()) {
      out << "manifest\tFAIL\t" << problem << '\n';
      ok = false;
    }
  return ok ? kSuccess : kFailure;
}

int cmd_classify(std::size_t r, const std::string& golden_path, const std::string& format, bool allow_partial,
                 const Shared& shared, std::ostream& out) {
  Catalog catalog = shared.load_catalog();
  ClassifyOptions options;
  options.subgroups.cap = shared.subgroup_cap;
  options.counting = {shared.element_cap, 1};
  options.jobs = shared.jobs;
  options.allow_partial = allow_partial;
  std::vector<ClassificationRow> golden;
  if (!golden_path.empty()) golden = load_golden_file(golden_path);
  for (const auto& row : golden)
    if (row.r != r)
      throw Error(ErrorKind::usage, "golden table " + golden_path + " holds r=" + std::to_string(row.r) +
                                        " rows, expected r=" + std::to_string(r));

  RunReport report = classify(r, catalog, options);
  if (format == "pretty")
    write_pretty(out, report.rows);
  else
    write_tsv(out, report.rows);

  bool ok = true;
  for (const auto& d : report.degrees)
    if (d.plan.coverage != Coverage::complete)
      out << "# coverage\t" << d.plan.degree << '\t' << to_string(d.plan.coverage) << '\t' << d.plan.gap << '\n';
  if (!golden_path.empty()) {
    check_golden_spots(report, golden, catalog, options);
    for (const auto& spot : report.spot_checks) {
      out << "# spot\t" << spot.golden.label << '\t' << to_string(spot.status) << '\t'
          << (spot.catalog_id.empty() ? spot.detail : spot.catalog_id + ": " + spot.detail) << '\n';
      ok = ok && spot.status != SpotCheck::Status::mismatch;
    }
    auto diff = compare_to_golden(report, golden);
    for (const auto& row : diff.ambiguous)
      out << "# ambiguous\t" << row.degree << '\t' << row.order << '\t' << row.s << '\t' << row.label << '\n';
    std::ostringstream lines;
    write_diff(lines, diff);
    std::istringstream in(lines.str());
    for (std::string line; std::getline(in, line);) out << "# " << line << '\n';
    out << "# diff\t" << (diff.empty() ? "empty" : "nonempty") << '\n';
    ok = ok && diff.empty();
  }
  return ok ? kSuccess : kFailure;
}

// Flags win over the environment.
template <typename T>
void env_override(const CLI::Option* flag, const char* name, T& value, std::uint64_t lo, std::uint64_t hi) {
  const char* text = std::getenv(name);
  if (flag->count() > 0 || !text) return;
  std::uint64_t v = 0;
  std::string_view sv(text);
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc{} || ptr != sv.data() + sv.size() || sv.empty() || v < lo || v > hi)
    throw Error(ErrorKind::usage, std::string(name) + ": bad value \"" + text + "\"");
  value = static_cast<T>(v);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set-orbit counting and classification of permutation groups", "setorbits"};
  app.require_subcommand(1);
  app.fallthrough();
  Shared shared;
  auto* jobs = app.add_option("--jobs", shared.jobs, "Worker threads [env SETORBITS_JOBS]")
                   ->check(CLI::Range(1u, 256u));
  auto* element_cap = app.add_option("--element-cap", shared.element_cap,
                                     "Largest group order iterated element by element [env SETORBITS_ELEMENT_CAP]")
                          ->check(CLI::PositiveNumber);
  auto* subgroup_cap =
      app.add_option("--subgroup-cap", shared.subgroup_cap,
                     "Largest n whose subgroups of S_n are enumerated [env SETORBITS_SUBGROUP_CAP]")
          ->check(CLI::Range(std::size_t{1}, kMaxSubgroupDegree));
  app.add_option("--catalog", shared.catalog, "Catalog file")->envname("SETORBITS_CATALOG");

  auto* orbits = app.add_subcommand("orbits", "Count set-orbits of one group");
  std::string group;
  std::size_t degree = 0;
  bool per_size = false, dump = false;
  orbits->add_option("--group", group, "Catalog id, gens:\"(1,2);(3,4)\" or family:n")->required();
  orbits->add_option("--degree", degree, "Degree for gens: groups (default: largest point)");
  orbits->add_flag("--per-size", per_size, "Print s_0 .. s_n");
  orbits->add_flag("--dump", dump, "List every orbit");

  auto* prune = app.add_subcommand("prune", "Degree elimination report");
  std::size_t prune_r = 0;
  std::optional<std::size_t> max_degree;
  prune->add_option("--r", prune_r, "Excess r in s = n + r")->required()->check(CLI::Range(2, 15));
  prune->add_option("--max-degree", max_degree, "Last degree reported")->check(CLI::Range(2, 100000));

  auto* subgroups = app.add_subcommand("subgroups", "Conjugacy classes of subgroups of S_n");
  std::size_t sub_degree = 0;
  bool transitive_only = false;
  subgroups->add_option("--degree", sub_degree, "n")->required()->check(CLI::Range(std::size_t{1}, kMaxSubgroupDegree));
  subgroups->add_flag("--transitive", transitive_only, "Transitive classes only");

  auto* verify = app.add_subcommand("catalog-verify", "Check every catalog entry");
  std::string only;
  verify->add_option("--id", only, "Check a single entry");

  auto* classify_cmd = app.add_subcommand("classify", "Groups with exactly n + r set-orbits");
  std::size_t r = 0;
  std::string golden, format = "tsv";
  bool partial = false;
  classify_cmd->add_option("--r", r, "Excess r")->required()->check(CLI::Range(2, 11));
  classify_cmd->add_option("--golden", golden, "Golden TSV to compare against");
  classify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "pretty"}));
  classify_cmd->add_flag("--partial", partial, "Report uncovered degrees instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    auto extra = app.remaining(true);
    if (!extra.empty())
      err << "error[usage]: unexpected argument \"" << extra.front() << "\"\n";
    else
      err << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    env_override(jobs, "SETORBITS_JOBS", shared.jobs, 1, 256);
    env_override(element_cap, "SETORBITS_ELEMENT_CAP", shared.element_cap, 1, UINT64_MAX);
    env_override(subgroup_cap, "SETORBITS_SUBGROUP_CAP", shared.subgroup_cap, 1, kMaxSubgroupDegree);
  } catch (const Error& e) {
    err << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*orbits) return cmd_orbits(group, degree, per_size, dump, shared, out);
    if (*prune) return cmd_prune(prune_r, max_degree, out);
    if (*subgroups) return cmd_subgroups(sub_degree, transitive_only, shared, out);
    if (*verify) return cmd_catalog_verify(only, shared, out);
    return cmd_classify(r, golden, format, partial, shared, out);
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::usage ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace setorbits::cli
