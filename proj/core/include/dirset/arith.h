#ifndef DIRSET_ARITH_H_
#define DIRSET_ARITH_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace dirset {

enum class SieveKind { kOmega, kTotient, kPrimes };

std::string_view ToString(SieveKind kind);
SieveKind ParseSieveKind(std::string_view text);

struct SieveOptions {
  // Upper limit on the bytes a single in-memory table may occupy.
  std::uint64_t memory_budget_bytes = std::uint64_t{1} << 31;
  unsigned workers = 0;
};

// Bounds above this are served only by the segmented interface.
inline constexpr std::uint64_t kSegmentedThreshold = 100'000'000;

// values[n] for 0 <= n <= bound. For kPrimes the value is 1 for primes and
// 0 otherwise; values[0] is 0 for every kind.
class SieveTable {
 public:
  SieveTable(SieveKind kind, std::uint64_t bound, std::vector<std::uint64_t> values);

  SieveKind kind() const { return kind_; }
  std::uint64_t bound() const { return bound_; }
  std::uint64_t operator[](std::uint64_t n) const { return values_[n]; }
  std::span<const std::uint64_t> values() const { return values_; }

 private:
  SieveKind kind_;
  std::uint64_t bound_;
  std::vector<std::uint64_t> values_;
};

// Linear sieve over [0, bound]. Throws ConfigError for bound == 0 and
// ResourceError when the table would exceed the memory budget or the
// bound is above kSegmentedThreshold (use ForEachSegment instead).
SieveTable Sieve(SieveKind kind, std::uint64_t bound, const SieveOptions& options = {});

// Segmented sieve over [1, bound]: the range is cut into fixed-size
// segments, sieved independently (in parallel when workers > 1) and handed
// to `visit(first, values)` in ascending order of `first`, where values[i]
// belongs to n = first + i.
using SegmentVisitor = std::function<void(std::uint64_t first, std::span<const std::uint64_t> values)>;
void ForEachSegment(SieveKind kind, std::uint64_t bound, std::uint64_t segment_size,
                    const SegmentVisitor& visit, unsigned workers = 0);

std::vector<std::uint64_t> PrimesUpTo(std::uint64_t bound);

// Primes p <= bound with p = a (mod m), ascending. m = 1 gives every
// prime. Throws ConfigError unless gcd(a, m) == 1 and m >= 1.
std::vector<std::uint64_t> PrimesInAp(std::uint64_t m, std::uint64_t a, std::uint64_t bound);

// Deterministic Miller-Rabin for 64-bit n.
bool IsPrime(std::uint64_t n);

// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> Factorize(std::uint64_t n);

std::uint64_t Omega(std::uint64_t n);
std::uint64_t Totient(std::uint64_t n);

// One checkpoint of f_X = #{n <= X : n = k f(k) for some k}.
struct CountCheckpoint {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  // count / sqrt(X) for the totient, count * log(log(X)) / X for omega.
  double ratio_to_reference = 0.0;
};

// Reference constant for the totient case of f_X / sqrt(X).
inline constexpr double kTotientRepresentableConstant = 1.365;

// Counts n <= x_max of the form k f(k), f = omega or totient taken from
// `table`, at checkpoints 10, 100, ... below x_max plus x_max itself.
// Only n >= 1 are counted. Throws ConfigError when table.bound() < x_max
// or the table is a prime table.
std::vector<CountCheckpoint> RepresentableCount(const SieveTable& table, std::uint64_t x_max);

// Same, at caller-chosen checkpoints (ascending, each <= table.bound()).
std::vector<CountCheckpoint> RepresentableCount(const SieveTable& table,
                                                std::span<const std::uint64_t> checkpoints);

}  // namespace dirset

#endif  // DIRSET_ARITH_H_
