#ifndef DIRSET_INTSETS_H_
#define DIRSET_INTSETS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dirset/polynomial.h"
#include "dirset/rational.h"

namespace dirset {

// Union over j >= 0 of [a q^j, b q^j) intersected with the positive
// integers, for every segment (a, b).
struct BlockUnion {
  std::uint64_t q = 2;
  std::vector<std::pair<Rational, Rational>> segments;
  friend bool operator==(const BlockUnion&, const BlockUnion&) = default;
};

// Primes congruent to a modulo m; m = 1, a = 0 is the set of all primes.
struct PrimesInAP {
  std::uint64_t m = 1;
  std::uint64_t a = 0;
  friend bool operator==(const PrimesInAP&, const PrimesInAP&) = default;
};

// Positive values of f over the lattice box {1..lattice_bound}^m. With
// diagonal_augment the positive values of g(n) = f(n, ..., n) for every
// n >= 1 are added as well.
struct PolynomialImage {
  Polynomial f;
  std::uint64_t lattice_bound = 1;
  bool diagonal_augment = false;
  friend bool operator==(const PolynomialImage&, const PolynomialImage&) = default;
};

// {m^r : m >= 2, r >= min_exponent}.
struct PerfectPowers {
  unsigned min_exponent = 3;
  friend bool operator==(const PerfectPowers&, const PerfectPowers&) = default;
};

// {n * omega(n) : n >= 1} without 0.
struct WeightedByOmega {
  friend bool operator==(const WeightedByOmega&, const WeightedByOmega&) = default;
};

// {n * phi(n) : n >= 1}.
struct WeightedByTotient {
  friend bool operator==(const WeightedByTotient&, const WeightedByTotient&) = default;
};

// {2^m : m >= 2} union {3^n : n >= 2}.
struct TwoThreePowers {
  friend bool operator==(const TwoThreePowers&, const TwoThreePowers&) = default;
};

// Finite, strictly ascending list of positive integers.
struct Explicit {
  std::vector<std::uint64_t> values;
  std::string source;  // file path when loaded from disk, else empty
  friend bool operator==(const Explicit& a, const Explicit& b) { return a.values == b.values; }
};

using IntegerSetSpec = std::variant<BlockUnion, PrimesInAP, PolynomialImage, PerfectPowers,
                                    WeightedByOmega, WeightedByTotient, TwoThreePowers, Explicit>;

// Throws ConfigError for a malformed descriptor: q < 2, non-positive or
// empty segments, gcd(a, m) != 1, min_exponent < 3, lattice_bound < 1,
// a polynomial with zero arity, or an Explicit list that is not strictly
// ascending and positive.
void Validate(const IntegerSetSpec& spec);

// Ascending, duplicate-free elements <= bound. Exact for every variant;
// PolynomialImage follows the lattice-box semantics documented above.
std::vector<std::uint64_t> Enumerate(const IntegerSetSpec& spec, std::uint64_t bound);

// Membership consistent with Enumerate.
bool Contains(const IntegerSetSpec& spec, std::uint64_t n);

// Human-readable caveats for an enumeration, e.g. the lattice box used by a
// PolynomialImage or an empty image. Empty when there is nothing to say.
std::vector<std::string> EnumerationNotes(const IntegerSetSpec& spec, std::uint64_t bound,
                                          std::size_t element_count);

// First `count` terms of the strictly ascending sequence obtained from
// g(n) = f(n, ..., n), n = 1, 2, ..., by keeping each positive value that
// exceeds every value kept before it. Throws ConfigError when the leading
// coefficients of f sum to a non-positive value or f is constant, and
// ResourceError if g overflows int64 before `count` terms are found.
std::vector<std::uint64_t> DiagonalSequence(const PolynomialImage& spec, std::size_t count);

// Reads one positive integer per line. Blank lines and lines starting with
// '#' are skipped. Duplicates and descending values raise ParseError with
// the offending line number.
Explicit LoadExplicit(const std::filesystem::path& path);
Explicit ParseExplicit(std::string_view text);

// Textual descriptors used by the CLI and config files:
//   naturals                     every positive integer
//   blocks:q=5:1-2,2-3           BlockUnion; endpoints may be p/q or decimal
//   primes                       all primes
//   primes-ap:m=4:a=1            PrimesInAP
//   poly:L=100:x1^2+x2^2[:diag]  PolynomialImage, optional diagonal augment
//   perfect-powers[:r=4]         PerfectPowers
//   n-omega, n-phi               WeightedByOmega, WeightedByTotient
//   two-three-powers             TwoThreePowers
//   explicit:1,2,3               Explicit
//   file:path/to/list.txt        Explicit loaded from disk
IntegerSetSpec ParseSetSpec(std::string_view text);
std::string FormatSetSpec(const IntegerSetSpec& spec);

}  // namespace dirset

#endif  // DIRSET_INTSETS_H_
