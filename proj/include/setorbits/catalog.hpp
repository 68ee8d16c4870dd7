#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setorbits/group.hpp"
#include "setorbits/orbitcount.hpp"

namespace setorbits {

/// One record of the catalog file:
/// `id|degree|name|expected_order|tag,tag,...|gen;gen;...[|expected_s]`.
struct CatalogEntry {
  std::string id;
  std::size_t degree = 0;
  std::string name;
  std::uint64_t expected_order = 0;
  std::vector<std::string> tags;
  std::vector<std::string> generator_texts;
  std::optional<std::uint64_t> expected_s;
  std::size_t line = 0;

  bool has_tag(std::string_view tag) const;
  /// The `paper:<ID>` tag value, if any.
  std::optional<std::string> paper_id() const;
  PermGroup build() const;
};

/// Throws Error(catalog) naming the line for malformed records and
/// duplicate ids; generator errors keep their kind.
std::vector<CatalogEntry> load_catalog(std::istream& in, std::string_view source = "catalog");

std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path);

/// $SETORBITS_CATALOG if set, otherwise the shipped data/catalog.txt.
std::filesystem::path default_catalog_path();

struct VerificationCheck {
  std::string name;  // order, transitive, primitive, s
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string id;
  std::vector<VerificationCheck> checks;

  bool passed() const;
};

/// Largest degree for which verify_entry recomputes expected_s.
inline constexpr std::size_t kMaxVerifiedSDegree = 14;

VerificationReport verify_entry(const CatalogEntry& entry, const CountOptions& options = {});

enum class Family { cyclic, dihedral, symmetric, alternating };

std::optional<Family> parse_family(std::string_view name);

/// Natural action on n points. Dihedral needs n >= 3 (order 2n).
PermGroup builtin(Family family, std::size_t n);

enum class TagFilter { all, transitive, primitive };

/// Number of primitive groups of each degree 2..12.
const std::map<std::size_t, std::size_t>& primitive_manifest();

/// Degrees whose transitive groups are all present in the catalog.
bool transitive_list_complete(std::size_t degree);

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  static Catalog load_default();

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const CatalogEntry* find(std::string_view id) const;
  /// Entries carrying `paper:<paper_id>`.
  std::vector<const CatalogEntry*> with_paper_id(std::string_view paper_id) const;

  /// Entries of the degree that pass the tag filter and, when t is given,
  /// have C(degree, t) dividing their order.
  std::vector<const CatalogEntry*> candidates(std::size_t degree, TagFilter filter,
                                              std::optional<std::size_t> t = {}) const;

  std::size_t count(std::size_t degree, TagFilter filter) const;

  /// Human-readable problems with the primitive manifest; empty when the
  /// catalog holds every primitive group of degree 2..12.
  std::vector<std::string> manifest_problems() const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace setorbits
