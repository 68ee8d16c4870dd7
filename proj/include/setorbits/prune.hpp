#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace setorbits {

/// Largest value accepted by primes_in.
inline constexpr std::uint64_t kMaxPrimeWindow = 1'000'000;

/// Primes p with lo < p < hi, or lo < p <= hi when hi_inclusive.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi, bool hi_inclusive);

bool is_prime(std::uint64_t n);

/// Prime powers q = p^k, k >= 1.
bool is_prime_power(std::uint64_t q);

/// False exactly when r is even and n is odd.
bool parity_admissible(std::size_t n, std::size_t r);

enum class Parity { even, odd };

inline Parity parity_of(std::size_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// Smallest k0 whose eliminated-size count (2k0 for odd degree, 2k0 + 1 for
/// even) exceeds r - 1. Throws out_of_range for r < 2.
std::size_t required_k0(Parity parity, std::size_t r);

/// n = m * p0 + rem with p0 prime, p0 > m, rem > m.
struct MillerDecomposition {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p0 = 0;
  std::size_t rem = 0;

  friend bool operator==(const MillerDecomposition&, const MillerDecomposition&) = default;
};

/// "1x19+5"
std::string to_string(const MillerDecomposition& d);

/// Decomposition with the smallest rem (ties: smallest m),
/// or nullopt when n admits none.
std::optional<MillerDecomposition> miller_bound(std::size_t n);

/// Transitivity reached by a concrete group on n points that avoids A_n:
/// 5 on 12 and 24, 4 on 11 and 23, 3 on q+1 (q >= 5 a prime power), on 2^d
/// (d >= 3) and on 22. Zero when no such family is recorded.
std::size_t known_transitivity_floor(std::size_t n);

/// Upper bound used by step 2: max(miller rem, known floor), or nullopt
/// when no Miller decomposition exists.
std::optional<std::size_t> transitivity_ceiling(std::size_t n);

/// Smallest prime p with floor(n/2) + required_k0 < p and 3p < 2n.
std::optional<std::uint64_t> step1_eliminates(std::size_t n, std::size_t r);

struct Step2Witness {
  std::uint64_t prime = 0;
  MillerDecomposition miller;
  std::size_t ceiling = 0;
};

/// Smallest prime p with floor(n/2) + k1 < p <= n, reported when
/// n - p + 1 exceeds transitivity_ceiling(n).
std::optional<Step2Witness> step2_eliminates(std::size_t n, std::size_t r);

/// Largest k0 >= 0 with 48 - (n+1)/2 <= k0 <= 5n/54 - 1/2.
std::optional<std::size_t> thm37_max_k0(std::size_t n);

/// 81 for r <= 15; throws out_of_range above.
std::size_t degree_bound(std::size_t r);

/// C(n, t), or nullopt past 64 bits.
std::optional<std::uint64_t> binomial(std::size_t n, std::size_t t);

/// C(n, t) divides order.
bool binomial_divides(std::size_t n, std::size_t t, std::uint64_t order);

enum class PruneStage { size_bound, parity, step1, step2, survived };

std::string_view to_string(PruneStage stage);

struct PruneVerdict {
  std::size_t n = 0;
  std::size_t r = 0;
  bool eliminated = false;
  PruneStage stage = PruneStage::survived;
  std::size_t k = 0;  // k0 for step 1, k1 for step 2
  std::optional<std::uint64_t> prime;
  std::optional<MillerDecomposition> miller;
  std::size_t ceiling = 0;

  /// `p=17`, `miller=1x19+5,p=17[,ceiling=K]` or `-`.
  std::string witness_text() const;
};

/// Runs the stages in order: size bound (2^n < n + r), parity, step 1,
/// step 2.
PruneVerdict prune_degree(std::size_t n, std::size_t r);

/// Verdicts for n = 2..max_degree (default degree_bound(r)).
std::vector<PruneVerdict> prune_report(std::size_t r, std::optional<std::size_t> max_degree = {});

std::vector<std::size_t> survivors(const std::vector<PruneVerdict>& verdicts);

}  // namespace setorbits
