#include "setorbits/prune.hpp"

#include <algorithm>
#include <mutex>

#include "setorbits/error.hpp"

namespace setorbits {

namespace {

const std::vector<bool>& sieve() {
  static std::vector<bool> composite;
  static std::once_flag once;
  std::call_once(once, [] {
    composite.assign(kMaxPrimeWindow + 1, false);
    composite[0] = composite[1] = true;
    for (std::uint64_t i = 2; i * i <= kMaxPrimeWindow; ++i)
      if (!composite[i])
        for (std::uint64_t j = i * i; j <= kMaxPrimeWindow; j += i) composite[j] = true;
  });
  return composite;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n <= kMaxPrimeWindow) return !sieve()[n];
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi, bool hi_inclusive) {
  if (lo > hi)
    throw Error(ErrorKind::out_of_range,
                "inverted prime window (" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
  if (hi > kMaxPrimeWindow)
    throw Error(ErrorKind::out_of_range, "prime window beyond " + std::to_string(kMaxPrimeWindow));
  std::vector<std::uint64_t> out;
  const auto& composite = sieve();
  for (std::uint64_t p = lo + 1; p < hi || (hi_inclusive && p == hi); ++p)
    if (!composite[p]) out.push_back(p);
  return out;
}

bool parity_admissible(std::size_t n, std::size_t r) { return !(r % 2 == 0 && n % 2 == 1); }

std::size_t required_k0(Parity parity, std::size_t r) {
  if (r < 2) throw Error(ErrorKind::out_of_range, "k0 is defined for r >= 2");
  return parity == Parity::odd ? (r + 1) / 2 : r / 2;
}

std::string to_string(const MillerDecomposition& d) {
  return std::to_string(d.m) + "x" + std::to_string(d.p0) + "+" + std::to_string(d.rem);
}

std::optional<MillerDecomposition> miller_bound(std::size_t n) {
  std::optional<MillerDecomposition> best;
  for (std::size_t m = 1; m * (m + 1) + (m + 1) <= n; ++m) {
    for (std::size_t p0 = m + 1; m * p0 + m < n; ++p0) {
      if (!is_prime(p0)) continue;
      std::size_t rem = n - m * p0;
      if (!best || rem < best->rem)
        best = MillerDecomposition{n, m, p0, rem};
    }
  }
  return best;
}

std::size_t known_transitivity_floor(std::size_t n) {
  if (n == 12 || n == 24) return 5;
  if (n == 11 || n == 23) return 4;
  if (n == 22) return 3;
  if (n >= 6 && is_prime_power(n - 1)) return 3;
  if (n >= 8 && (n & (n - 1)) == 0) return 3;
  return 0;
}

std::optional<std::size_t> transitivity_ceiling(std::size_t n) {
  auto miller = miller_bound(n);
  if (!miller) return std::nullopt;
  return std::max(miller->rem, known_transitivity_floor(n));
}

std::optional<std::uint64_t> step1_eliminates(std::size_t n, std::size_t r) {
  const std::size_t k0 = required_k0(parity_of(n), r);
  for (std::uint64_t p = n / 2 + k0 + 1; 3 * p < 2 * n; ++p)
    if (is_prime(p)) return p;
  return std::nullopt;
}

std::optional<Step2Witness> step2_eliminates(std::size_t n, std::size_t r) {
  const std::size_t k1 = required_k0(parity_of(n), r);
  auto ceiling = transitivity_ceiling(n);
  if (!ceiling) return std::nullopt;
  for (std::uint64_t p = n / 2 + k1 + 1; p <= n; ++p) {
    if (!is_prime(p)) continue;
    if (n - p + 1 > *ceiling) return Step2Witness{p, *miller_bound(n), *ceiling};
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> thm37_max_k0(std::size_t n) {
  if (5 * n < 27) return std::nullopt;
  const std::size_t k = (5 * n - 27) / 54;
  if (2 * k + n < 95) return std::nullopt;
  return k;
}

std::size_t degree_bound(std::size_t r) {
  if (r > 15)
    throw Error(ErrorKind::out_of_range,
                "method cap exceeded: the degree bound is only established for r <= 15");
  return 81;
}

std::optional<std::uint64_t> binomial(std::size_t n, std::size_t t) {
  if (t > n) return 0;
  t = std::min(t, n - t);
  unsigned __int128 c = 1;
  for (std::size_t i = 0; i < t; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

bool binomial_divides(std::size_t n, std::size_t t, std::uint64_t order) {
  if (t > n) throw Error(ErrorKind::out_of_range, "subset size exceeds degree");
  auto c = binomial(n, t);
  return c && order % *c == 0;
}

std::string_view to_string(PruneStage stage) {
  switch (stage) {
    case PruneStage::size_bound: return "size";
    case PruneStage::parity: return "parity";
    case PruneStage::step1: return "step1";
    case PruneStage::step2: return "step2";
    case PruneStage::survived: return "survived";
  }
  return "?";
}

std::string PruneVerdict::witness_text() const {
  std::string out;
  if (miller) out = "miller=" + to_string(*miller) + ",";
  if (prime) out += "p=" + std::to_string(*prime);
  if (miller && ceiling > miller->rem) out += ",ceiling=" + std::to_string(ceiling);
  return out.empty() ? "-" : out;
}

PruneVerdict prune_degree(std::size_t n, std::size_t r) {
  PruneVerdict v;
  v.n = n;
  v.r = r;
  auto eliminate = [&](PruneStage stage) {
    v.eliminated = true;
    v.stage = stage;
    return v;
  };
  if (n < 64 && (std::uint64_t{1} << n) < n + r) return eliminate(PruneStage::size_bound);
  if (!parity_admissible(n, r)) return eliminate(PruneStage::parity);
  if (n < 3) return v;
  v.k = required_k0(parity_of(n), r);
  if (auto p = step1_eliminates(n, r)) {
    v.prime = *p;
    return eliminate(PruneStage::step1);
  }
  if (auto w = step2_eliminates(n, r)) {
    v.prime = w->prime;
    v.miller = w->miller;
    v.ceiling = w->ceiling;
    return eliminate(PruneStage::step2);
  }
  v.k = 0;
  return v;
}

std::vector<PruneVerdict> prune_report(std::size_t r, std::optional<std::size_t> max_degree) {
  const std::size_t top = max_degree ? *max_degree : degree_bound(r);
  std::vector<PruneVerdict> out;
  for (std::size_t n = 2; n <= top; ++n) out.push_back(prune_degree(n, r));
  return out;
}

std::vector<std::size_t> survivors(const std::vector<PruneVerdict>& verdicts) {
  std::vector<std::size_t> out;
  for (const auto& v : verdicts)
    if (!v.eliminated) out.push_back(v.n);
  return out;
}

}  // namespace setorbits
