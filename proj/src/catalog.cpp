#include "setorbits/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>

#include "setorbits/error.hpp"
#include "setorbits/prune.hpp"

namespace setorbits {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string cycle_text(std::size_t from, std::size_t to) {
  std::string out = "(";
  for (std::size_t i = from; i <= to; ++i) out += std::to_string(i) + (i < to ? "," : ")");
  return out;
}

}  // namespace

bool CatalogEntry::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::optional<std::string> CatalogEntry::paper_id() const {
  for (const auto& t : tags)
    if (t.starts_with("paper:")) return t.substr(6);
  return std::nullopt;
}

PermGroup CatalogEntry::build() const {
  std::vector<Permutation> gens;
  for (const auto& g : generator_texts) gens.push_back(parse_permutation(g, degree));
  return PermGroup(degree, std::move(gens));
}

std::vector<CatalogEntry> load_catalog(std::istream& in, std::string_view source) {
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    auto fail = [&](const std::string& why) { throw Error(ErrorKind::catalog, where + why); };

    auto fields = split(line, '|');
    if (fields.size() != 6 && fields.size() != 7)
      fail("expected 6 or 7 '|'-separated fields, found " + std::to_string(fields.size()));
    CatalogEntry e;
    e.line = line_no;
    e.id = fields[0];
    if (e.id.empty()) fail("empty id");
    auto degree = parse_uint(fields[1]);
    if (!degree || *degree == 0 || *degree > 64) fail("bad degree \"" + fields[1] + "\"");
    e.degree = *degree;
    e.name = fields[2];
    auto order = parse_uint(fields[3]);
    if (!order || *order == 0) fail("bad expected order \"" + fields[3] + "\"");
    e.expected_order = *order;
    if (!fields[4].empty())
      for (auto& tag : split(fields[4], ',')) {
        if (tag != "transitive" && tag != "primitive" && !(tag.starts_with("paper:") && tag.size() > 6))
          fail("unknown tag \"" + tag + "\"");
        e.tags.push_back(tag);
      }
    if (!fields[5].empty()) e.generator_texts = split(fields[5], ';');
    if (fields.size() == 7) {
      auto s = parse_uint(fields[6]);
      if (!s) fail("bad expected s \"" + fields[6] + "\"");
      e.expected_s = *s;
    }
    for (const auto& g : e.generator_texts) {
      try {
        parse_permutation(g, e.degree);
      } catch (const Error& err) {
        throw Error(err.kind(), where + err.what());
      }
    }
    if (!ids.insert(e.id).second) fail("duplicate id \"" + e.id + "\"");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::catalog, "cannot open catalog " + path.string());
  return load_catalog(in, path.filename().string());
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("SETORBITS_CATALOG"); env && *env) return env;
  return std::filesystem::path(SETORBITS_DATA_DIR) / "data" / "catalog.txt";
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerificationReport verify_entry(const CatalogEntry& entry, const CountOptions& options) {
  VerificationReport report;
  report.id = entry.id;
  std::optional<PermGroup> group;
  try {
    group = entry.build();
  } catch (const Error& e) {
    report.checks.push_back({"order", false, e.what()});
    return report;
  }
  std::optional<std::uint64_t> order;
  try {
    order = group->order();
  } catch (const Error&) {
  }
  report.checks.push_back({"order", order == entry.expected_order,
                           "expected " + std::to_string(entry.expected_order) + ", got " +
                               (order ? std::to_string(*order) : std::string("overflow"))});
  bool transitive = is_transitive(*group);
  report.checks.push_back({"transitive", transitive == entry.has_tag("transitive"),
                           transitive ? "group is transitive" : "group is intransitive"});
  bool primitive = is_primitive(*group);
  report.checks.push_back({"primitive", primitive == entry.has_tag("primitive"),
                           primitive ? "group is primitive" : "group is not primitive"});
  if (entry.expected_s && entry.degree <= kMaxVerifiedSDegree) {
    try {
      std::uint64_t s = count_set_orbits(*group, options);
      report.checks.push_back({"s", s == *entry.expected_s,
                               "expected " + std::to_string(*entry.expected_s) + ", got " + std::to_string(s)});
    } catch (const Error& e) {
      report.checks.push_back({"s", false, e.what()});
    }
  }
  return report;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "cyclic") return Family::cyclic;
  if (name == "dihedral") return Family::dihedral;
  if (name == "symmetric") return Family::symmetric;
  if (name == "alternating") return Family::alternating;
  return std::nullopt;
}

PermGroup builtin(Family family, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::out_of_range, "degree must be positive");
  std::string gens;
  switch (family) {
    case Family::cyclic:
      if (n >= 2) gens = cycle_text(1, n);
      break;
    case Family::dihedral: {
      if (n < 3) throw Error(ErrorKind::out_of_range, "dihedral groups need n >= 3");
      gens = cycle_text(1, n);
      std::string reflection;
      for (std::size_t i = 1; i < n + 1 - i; ++i)
        reflection += "(" + std::to_string(i) + "," + std::to_string(n + 1 - i) + ")";
      gens += ";" + reflection;
      break;
    }
    case Family::symmetric:
      if (n >= 2) gens = "(1,2);" + cycle_text(1, n);
      break;
    case Family::alternating:
      for (std::size_t i = 3; i <= n; ++i) gens += (i > 3 ? ";" : "") + std::string("(1,2,") + std::to_string(i) + ")";
      break;
  }
  return PermGroup(n, gens.empty() ? std::vector<Permutation>{} : parse_generators(gens, n));
}

const std::map<std::size_t, std::size_t>& primitive_manifest() {
  static const std::map<std::size_t, std::size_t> counts{
      {2, 1}, {3, 2}, {4, 2}, {5, 5}, {6, 4}, {7, 7}, {8, 7}, {9, 11}, {10, 9}, {11, 8}, {12, 6}};
  return counts;
}

bool transitive_list_complete(std::size_t degree) {
  return degree == 1 || degree == 4 || (degree <= 11 && is_prime(degree));
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

Catalog Catalog::load_default() { return Catalog(load_catalog_file(default_catalog_path())); }

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<const CatalogEntry*> Catalog::with_paper_id(std::string_view paper_id) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.paper_id() == paper_id) out.push_back(&e);
  return out;
}

std::vector<const CatalogEntry*> Catalog::candidates(std::size_t degree, TagFilter filter,
                                                     std::optional<std::size_t> t) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (e.degree != degree) continue;
    if (filter == TagFilter::transitive && !e.has_tag("transitive")) continue;
    if (filter == TagFilter::primitive && !e.has_tag("primitive")) continue;
    if (t && !binomial_divides(degree, *t, e.expected_order)) continue;
    out.push_back(&e);
  }
  return out;
}

std::size_t Catalog::count(std::size_t degree, TagFilter filter) const {
  return candidates(degree, filter).size();
}

std::vector<std::string> Catalog::manifest_problems() const {
  std::vector<std::string> out;
  for (auto [degree, expected] : primitive_manifest()) {
    std::size_t have = count(degree, TagFilter::primitive);
    if (have != expected)
      out.push_back("degree " + std::to_string(degree) + ": " + std::to_string(have) +
                    " primitive entries, expected " + std::to_string(expected));
  }
  return out;
}

}  // namespace setorbits
