#include "setorbits/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "setorbits/error.hpp"

namespace setorbits {

namespace {

using Clock = std::chrono::steady_clock;

std::string degree_text(std::size_t n) { return std::to_string(n); }

// s-values already computed in this process, keyed by label and generators.
class CountCache {
 public:
  std::uint64_t get(const std::string& label, const PermGroup& group, const CountOptions& options) {
    std::string key = label + "|" + std::to_string(group.degree()) + "|" + format_generators(group.generators());
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    std::uint64_t s = count_set_orbits(group, options);
    std::lock_guard lock(mutex_);
    values_.emplace(key, s);
    return s;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, std::uint64_t> values_;
};

CountCache& cache() {
  static CountCache c;
  return c;
}

std::string subgroup_name(const PermGroup& group, std::uint64_t order, const Catalog& catalog) {
  for (const auto& e : catalog.entries()) {
    if (e.degree != group.degree() || e.expected_order != order) continue;
    if (conjugate_in_sn(e.build(), group)) return e.name;
  }
  if (order == 1) return "1";
  bool cyclic = false;
  group.for_each_element([&](std::span<const Point> p) {
    cyclic = cyclic || element_order(Permutation(std::vector<Point>(p.begin(), p.end()))) == order;
  });
  return cyclic ? "C" + std::to_string(order) : "-";
}

bool excluded(const PermGroup& g) { return g.degree() >= 3 && contains_alternating(g); }

std::tuple<std::size_t, std::uint64_t, std::uint64_t> key_of(const ClassificationRow& row) {
  return {row.degree, row.order, row.s};
}

std::string row_text(const ClassificationRow& row) {
  return std::to_string(row.r) + "\t" + std::to_string(row.degree) + "\t" + row.label + "\t" + row.name + "\t" +
         std::to_string(row.order) + "\t" + std::to_string(row.s);
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<std::size_t> forced_transitive_size(std::size_t n, std::size_t r) {
  if (r < 2) throw Error(ErrorKind::out_of_range, "r must be at least 2");
  long long t = n % 2 == 0 ? static_cast<long long>(n / 2) - 1 - static_cast<long long>((r - 2) / 2)
                           : static_cast<long long>((n - 1) / 2) - static_cast<long long>((r - 1) / 2);
  if (t < 1) return std::nullopt;
  return static_cast<std::size_t>(t);
}

std::string_view to_string(CandidateSource source) {
  switch (source) {
    case CandidateSource::primitive_catalog: return "primitive-catalog";
    case CandidateSource::transitive_subgroups: return "transitive-subgroups";
    case CandidateSource::transitive_catalog: return "transitive-catalog";
    case CandidateSource::all_subgroups: return "all-subgroups";
  }
  return "?";
}

std::string_view to_string(Coverage coverage) {
  switch (coverage) {
    case Coverage::complete: return "complete";
    case Coverage::out_of_cap: return "out-of-cap";
    case Coverage::data_gap: return "data-gap";
  }
  return "?";
}

std::string_view to_string(SpotCheck::Status status) {
  switch (status) {
    case SpotCheck::Status::reproduced: return "reproduced";
    case SpotCheck::Status::mismatch: return "mismatch";
    case SpotCheck::Status::out_of_cap: return "out-of-cap";
    case SpotCheck::Status::data_gap: return "data-gap";
  }
  return "?";
}

CandidatePlan plan_candidates(std::size_t n, std::size_t r, const Catalog& catalog,
                              const SubgroupOptions& subgroups) {
  CandidatePlan plan;
  plan.degree = n;
  plan.t = forced_transitive_size(n, r);
  const std::size_t cap = std::min(subgroups.cap, kMaxSubgroupDegree);
  const std::string sn = "S_" + degree_text(n);
  auto out_of_cap = [&](std::string what) {
    plan.coverage = Coverage::out_of_cap;
    plan.gap = what + " of degree " + degree_text(n) + ": needs subgroup data for " + sn + " (cap " +
               std::to_string(cap) + ")";
  };
  if (plan.t && *plan.t >= 2) {
    plan.source = CandidateSource::primitive_catalog;
    const auto& manifest = primitive_manifest();
    auto it = manifest.find(n);
    if (it == manifest.end() || catalog.count(n, TagFilter::primitive) != it->second) {
      plan.coverage = Coverage::data_gap;
      plan.gap = "catalog lacks a complete list of primitive groups of degree " + degree_text(n);
    }
  } else if (plan.t) {
    if (n <= cap) {
      plan.source = CandidateSource::transitive_subgroups;
    } else if (transitive_list_complete(n)) {
      plan.source = CandidateSource::transitive_catalog;
    } else {
      plan.source = CandidateSource::transitive_subgroups;
      out_of_cap("transitive groups");
    }
  } else {
    plan.source = CandidateSource::all_subgroups;
    if (n > cap) out_of_cap("all subgroups");
  }
  return plan;
}

std::vector<Candidate> candidate_groups(std::size_t n, std::size_t r, const Catalog& catalog,
                                        const SubgroupOptions& subgroups) {
  auto plan = plan_candidates(n, r, catalog, subgroups);
  if (plan.coverage != Coverage::complete) throw Error(ErrorKind::data_gap, plan.gap);
  std::vector<Candidate> out;
  auto from_catalog = [&](const std::vector<const CatalogEntry*>& entries) {
    for (const auto* e : entries) {
      PermGroup g = e->build();
      if (!excluded(g)) out.push_back({e->id, e->name, std::move(g)});
    }
  };
  auto from_classes = [&](const std::vector<const SubgroupClass*>& classes) {
    for (const auto* c : classes)
      if (!excluded(c->representative)) out.push_back({c->label, "", c->representative});
  };
  switch (plan.source) {
    case CandidateSource::primitive_catalog:
      from_catalog(catalog.candidates(n, TagFilter::primitive, plan.t));
      break;
    case CandidateSource::transitive_catalog:
      from_catalog(catalog.candidates(n, TagFilter::transitive));
      break;
    case CandidateSource::transitive_subgroups:
      from_classes(transitive_classes(n, subgroups));
      break;
    case CandidateSource::all_subgroups: {
      std::vector<const SubgroupClass*> all;
      for (const auto& c : all_subgroups(n, subgroups)) all.push_back(&c);
      from_classes(all);
      break;
    }
  }
  return out;
}

bool RunReport::complete() const { return gap_degrees().empty(); }

std::vector<std::size_t> RunReport::gap_degrees() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees)
    if (d.plan.coverage != Coverage::complete) out.push_back(d.plan.degree);
  return out;
}

RunReport classify(std::size_t r, const Catalog& catalog, const ClassifyOptions& options) {
  if (r < 2 || r > 11) throw Error(ErrorKind::out_of_range, "r must be between 2 and 11");
  RunReport report;
  report.r = r;
  auto t0 = Clock::now();
  report.verdicts = prune_report(r);
  report.timing["prune"] = Clock::now() - t0;

  std::vector<std::string> gaps;
  for (auto n : survivors(report.verdicts)) {
    DegreeCoverage d{plan_candidates(n, r, catalog, options.subgroups), 0};
    if (d.plan.coverage != Coverage::complete) gaps.push_back(degree_text(n) + " (" + d.plan.gap + ")");
    report.degrees.push_back(std::move(d));
  }
  if (!gaps.empty() && !options.allow_partial) {
    std::string msg = "r=" + std::to_string(r) + ": missing data for degree";
    for (std::size_t i = 0; i < gaps.size(); ++i) msg += (i ? ", " : " ") + gaps[i];
    throw Error(ErrorKind::data_gap, msg);
  }

  std::mutex merge;
  std::chrono::duration<double> candidate_time{0}, count_time{0};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= report.degrees.size()) return;
      auto& d = report.degrees[i];
      if (d.plan.coverage != Coverage::complete) continue;
      try {
        const std::size_t n = d.plan.degree;
        auto c0 = Clock::now();
        auto candidates = candidate_groups(n, r, catalog, options.subgroups);
        auto c1 = Clock::now();
        std::vector<ClassificationRow> rows;
        for (auto& c : candidates) {
          std::uint64_t s = cache().get(c.label, c.group, options.counting);
          if (s != n + r) continue;
          std::uint64_t order = c.group.order();
          std::string name = c.name.empty() ? subgroup_name(c.group, order, catalog) : c.name;
          rows.push_back({r, n, c.label, name, order, s});
        }
        auto c2 = Clock::now();
        std::lock_guard lock(merge);
        d.candidates = candidates.size();
        report.rows.insert(report.rows.end(), rows.begin(), rows.end());
        candidate_time += c1 - c0;
        count_time += c2 - c1;
      } catch (...) {
        std::lock_guard lock(merge);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  auto s0 = Clock::now();
  {
    std::vector<std::jthread> threads;
    for (unsigned j = 1; j < std::max(1u, options.jobs); ++j) threads.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.degree, a.order, a.label) < std::tie(b.degree, b.order, b.label);
  });
  report.timing["candidates"] = candidate_time;
  report.timing["count"] = count_time;
  report.timing["search"] = Clock::now() - s0;
  return report;
}

void check_golden_spots(RunReport& report, const std::vector<ClassificationRow>& golden, const Catalog& catalog,
                        const ClassifyOptions& options) {
  report.spot_checks.clear();
  for (const auto& row : golden) {
    auto d = std::find_if(report.degrees.begin(), report.degrees.end(),
                          [&](const auto& x) { return x.plan.degree == row.degree; });
    if (d == report.degrees.end() || d->plan.coverage == Coverage::complete) continue;
    SpotCheck spot;
    spot.golden = row;
    auto entries = catalog.with_paper_id(row.label);
    if (entries.empty()) {
      spot.status = d->plan.coverage == Coverage::out_of_cap ? SpotCheck::Status::out_of_cap
                                                             : SpotCheck::Status::data_gap;
      spot.detail = d->plan.gap;
    } else {
      const auto* e = entries.front();
      spot.catalog_id = e->id;
      PermGroup g = e->build();
      spot.computed_s = cache().get(e->id, g, options.counting);
      std::uint64_t order = g.order();
      bool ok = *spot.computed_s == row.s && order == row.order;
      spot.status = ok ? SpotCheck::Status::reproduced : SpotCheck::Status::mismatch;
      spot.detail = "order " + std::to_string(order) + ", s=" + std::to_string(*spot.computed_s);
    }
    report.spot_checks.push_back(std::move(spot));
  }
}

std::vector<ClassificationRow> load_golden(std::istream& in, std::string_view source) {
  std::vector<ClassificationRow> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::parse, std::string(source) + ":" + std::to_string(line_no) + ": " + why);
    };
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      auto pos = line.find('\t', start);
      f.push_back(line.substr(start, pos == std::string::npos ? pos : pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (f.size() != 6) fail("expected 6 tab-separated fields, found " + std::to_string(f.size()));
    auto r = parse_uint(f[0]), degree = parse_uint(f[1]), order = parse_uint(f[4]), s = parse_uint(f[5]);
    if (!r || !degree || !order || !s) fail("non-numeric r, degree, order or s");
    if (*s != *degree + *r) fail("s must equal degree + r");
    out.push_back({*r, *degree, f[2], f[3], *order, *s});
  }
  return out;
}

std::vector<ClassificationRow> load_golden_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::data_gap, "cannot open golden table " + path.string());
  return load_golden(in, path.filename().string());
}

void write_tsv(std::ostream& out, const std::vector<ClassificationRow>& rows) {
  out << "# r\tdegree\tlabel\tname\torder\ts\n";
  for (const auto& row : rows) out << row_text(row) << '\n';
}

void write_pretty(std::ostream& out, const std::vector<ClassificationRow>& rows) {
  std::size_t label_w = 5, name_w = 4, order_w = 5;
  for (const auto& row : rows) {
    label_w = std::max(label_w, row.label.size());
    name_w = std::max(name_w, row.name.size());
    order_w = std::max(order_w, std::to_string(row.order).size());
  }
  auto line = [&](auto r, auto n, const std::string& label, const std::string& name, auto order, auto s) {
    out << std::right << std::setw(3) << r << "  " << std::setw(6) << n << "  " << std::left
        << std::setw(static_cast<int>(label_w)) << label << "  " << std::setw(static_cast<int>(name_w)) << name
        << "  " << std::right << std::setw(static_cast<int>(order_w)) << order << "  " << std::setw(4) << s
        << '\n';
  };
  line("r", "degree", "label", "name", "order", "s");
  for (const auto& row : rows) line(row.r, row.degree, row.label, row.name, row.order, row.s);
}

GoldenDiff compare_to_golden(const RunReport& report, const std::vector<ClassificationRow>& golden) {
  GoldenDiff diff;
  const auto gaps = report.gap_degrees();
  std::map<std::tuple<std::size_t, std::uint64_t, std::uint64_t>, std::vector<const ClassificationRow*>> computed;
  std::map<std::tuple<std::size_t, std::uint64_t, std::uint64_t>, std::size_t> golden_count, computed_count;
  for (const auto& row : report.rows) {
    computed[key_of(row)].push_back(&row);
    ++computed_count[key_of(row)];
  }
  for (const auto& row : golden) {
    if (std::find(gaps.begin(), gaps.end(), row.degree) != gaps.end()) {
      diff.uncovered.push_back(row);
      continue;
    }
    ++golden_count[key_of(row)];
    auto it = computed.find(key_of(row));
    if (it == computed.end() || it->second.empty()) {
      diff.missing.push_back(row);
      continue;
    }
    it->second.erase(it->second.begin());
  }
  for (const auto& row : report.rows) {
    const auto& left = computed[key_of(row)];
    if (std::find(left.begin(), left.end(), &row) != left.end()) diff.extra.push_back(row);
    if (golden_count[key_of(row)] > 1 || computed_count[key_of(row)] > 1) diff.ambiguous.push_back(row);
  }
  return diff;
}

void write_diff(std::ostream& out, const GoldenDiff& diff) {
  for (const auto& row : diff.missing) out << "missing\t" << row_text(row) << '\n';
  for (const auto& row : diff.extra) out << "extra\t" << row_text(row) << '\n';
}

}  // namespace setorbits
