#include "setorbits/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "setorbits/error.hpp"

namespace setorbits {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::parse, "bad permutation \"" + std::string(text) + "\": " + why);
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw Error(ErrorKind::parse, "image table is not a bijection");
    seen[y] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error(ErrorKind::out_of_range, "degree must be positive");
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) parse_fail(text, "empty text");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  if (compact == "()") return Permutation(std::move(images));

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '(') parse_fail(text, "expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        if (value <= degree) value = value * 10 + static_cast<std::uint64_t>(compact[pos] - '0');
        ++pos;
      }
      if (pos == start) parse_fail(text, "expected a point");
      if (value < 1 || value > degree)
        throw Error(ErrorKind::degree_mismatch, "point " + compact.substr(start, pos - start) + " outside 1.." +
                                                    std::to_string(degree) + " in \"" + std::string(text) + "\"");
      Point p = static_cast<Point>(value - 1);
      if (used[p]) parse_fail(text, "point " + std::to_string(value) + " repeated");
      used[p] = true;
      cycle.push_back(p);
      if (pos >= compact.size()) parse_fail(text, "unterminated cycle");
      if (compact[pos] == ',') {
        ++pos;
        continue;
      }
      if (compact[pos] == ')') {
        ++pos;
        break;
      }
      parse_fail(text, std::string("unexpected '") + compact[pos] + "'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    gens.push_back(parse_permutation(text.substr(start, end - start), degree));
    start = end + 1;
  }
  return gens;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorKind::degree_mismatch, "compose: degrees " + std::to_string(a.degree()) + " and " +
                                                std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a[b[static_cast<Point>(x)]];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& a) {
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[a[static_cast<Point>(x)]] = static_cast<Point>(x);
  return Permutation(std::move(images));
}

CycleStructure cycle_type(const Permutation& p) {
  CycleStructure out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.lengths.push_back(len);
  }
  std::sort(out.lengths.begin(), out.lengths.end(), std::greater<>());
  return out;
}

std::size_t cycle_count(std::span<const Point> images) {
  // Degrees stay small, so a stack bitmap covers the common case.
  constexpr std::size_t kStack = 256;
  bool stack_seen[kStack] = {};
  std::vector<bool> heap_seen;
  const bool small = images.size() <= kStack;
  if (!small) heap_seen.assign(images.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (small ? stack_seen[i] : heap_seen[i]) continue;
    ++cycles;
    for (Point j = static_cast<Point>(i); !(small ? stack_seen[j] : heap_seen[j]); j = images[j]) {
      if (small)
        stack_seen[j] = true;
      else
        heap_seen[j] = true;
    }
  }
  return cycles;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(p).lengths) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

std::string format_generators(std::span<const Permutation> gens) {
  if (gens.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ';';
    out += gens[i].to_string();
  }
  return out;
}

}  // namespace setorbits
