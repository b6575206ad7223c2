#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "dirset/arith.h"
#include "dirset/error.h"

namespace dirset {
namespace {

// Trial-division reference values.
std::uint64_t NaiveOmega(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  return count + (n > 1 ? 1 : 0);
}

std::uint64_t NaivePhi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

bool NaivePrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

TEST(Sieve, SmallExamples) {
  const SieveTable omega = Sieve(SieveKind::kOmega, 12);
  EXPECT_EQ(omega[12], 2u);
  EXPECT_EQ(omega[7], 1u);
  EXPECT_EQ(omega[1], 0u);
  const SieveTable phi = Sieve(SieveKind::kTotient, 12);
  EXPECT_EQ(phi[12], 4u);
  EXPECT_EQ(phi[7], 6u);
  EXPECT_EQ(phi[1], 1u);
  std::uint64_t sum = 0;
  for (std::uint64_t d : {1, 2, 3, 4, 6, 12}) sum += phi[d];
  EXPECT_EQ(sum, 12u);
}

TEST(Sieve, MatchesNaiveOracleTo10000) {
  const std::uint64_t n = 10'000;
  const SieveTable omega = Sieve(SieveKind::kOmega, n);
  const SieveTable phi = Sieve(SieveKind::kTotient, n);
  const SieveTable primes = Sieve(SieveKind::kPrimes, n);
  for (std::uint64_t i = 1; i <= n; ++i) {
    ASSERT_EQ(omega[i], NaiveOmega(i)) << i;
    ASSERT_EQ(primes[i], NaivePrime(i) ? 1u : 0u) << i;
  }
  for (std::uint64_t i = 1; i <= 3000; ++i) ASSERT_EQ(phi[i], NaivePhi(i)) << i;
}

TEST(Sieve, StructuralInvariants) {
  const std::uint64_t n = 50'000;
  const SieveTable omega = Sieve(SieveKind::kOmega, n);
  const SieveTable phi = Sieve(SieveKind::kTotient, n);
  for (std::uint64_t m = 1; m * m <= n; ++m)
    for (std::uint64_t k = m; m * k <= n; k += 7)
      if (std::gcd(m, k) == 1) ASSERT_EQ(omega[m * k], omega[m] + omega[k]);
  for (std::uint64_t x : {360u, 1001u, 49'999u, 50'000u}) {
    std::uint64_t sum = 0;
    for (std::uint64_t d = 1; d <= x; ++d)
      if (x % d == 0) sum += phi[d];
    EXPECT_EQ(sum, x);
  }
}

TEST(Sieve, Errors) {
  EXPECT_THROW(Sieve(SieveKind::kOmega, 0), ConfigError);
  EXPECT_THROW(Sieve(SieveKind::kOmega, kSegmentedThreshold + 1), ResourceError);
  SieveOptions small;
  small.memory_budget_bytes = 1000;
  EXPECT_THROW(Sieve(SieveKind::kTotient, 1000, small), ResourceError);
}

TEST(ForEachSegment, AgreesWithLinearSieve) {
  for (SieveKind kind : {SieveKind::kOmega, SieveKind::kTotient, SieveKind::kPrimes}) {
    const std::uint64_t n = 200'003;
    const SieveTable table = Sieve(kind, n);
    for (unsigned workers : {1u, 3u}) {
      std::uint64_t next = 1;
      ForEachSegment(
          kind, n, 4096,
          [&](std::uint64_t first, std::span<const std::uint64_t> values) {
            ASSERT_EQ(first, next);
            for (std::size_t i = 0; i < values.size(); ++i) ASSERT_EQ(values[i], table[first + i]) << first + i;
            next = first + values.size();
          },
          workers);
      EXPECT_EQ(next, n + 1);
    }
  }
}

TEST(Primes, InArithmeticProgression) {
  EXPECT_EQ(PrimesInAp(4, 1, 30), (std::vector<std::uint64_t>{5, 13, 17, 29}));
  EXPECT_EQ(PrimesInAp(1, 0, 10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_THROW(PrimesInAp(4, 2, 30), ConfigError);
  const std::vector<std::uint64_t> all = PrimesUpTo(100'000);
  const std::vector<std::uint64_t> ap = PrimesInAp(10, 3, 100'000);
  for (std::uint64_t p : ap) {
    EXPECT_EQ(p % 10, 3u);
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), p));
  }
  std::size_t expected = 0;
  for (std::uint64_t p : all) expected += p % 10 == 3 ? 1 : 0;
  EXPECT_EQ(ap.size(), expected);
}

TEST(Primes, MillerRabin) {
  for (std::uint64_t n = 0; n < 20'000; ++n) ASSERT_EQ(IsPrime(n), NaivePrime(n)) << n;
  EXPECT_TRUE(IsPrime(18'446'744'073'709'551'557ULL));
  EXPECT_FALSE(IsPrime(3'215'031'751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Factorize, Roundtrip) {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : Factorize(n))
      for (unsigned i = 0; i < e; ++i) prod *= p;
    ASSERT_EQ(prod, n);
    ASSERT_EQ(Omega(n), NaiveOmega(n));
  }
  EXPECT_EQ(Totient(36), 12u);
}

// Brute force: distinct n = k f(k) <= x over k <= x.
std::set<std::uint64_t> NaiveRepresentable(std::uint64_t x, bool totient) {
  std::set<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= x; ++k) {
    const std::uint64_t f = totient ? NaivePhi(k) : NaiveOmega(k);
    if (f != 0 && k * f <= x) out.insert(k * f);
  }
  return out;
}

TEST(RepresentableCount, SmallExamples) {
  const auto omega = RepresentableCount(Sieve(SieveKind::kOmega, 20), 20);
  EXPECT_EQ(omega.back().x, 20u);
  EXPECT_EQ(omega.back().count, 14u);
  EXPECT_EQ(NaiveRepresentable(20, false),
            (std::set<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 12, 13, 16, 17, 19, 20}));
  const auto phi = RepresentableCount(Sieve(SieveKind::kTotient, 20), 20);
  EXPECT_EQ(phi.back().count, 6u);
  EXPECT_EQ(NaiveRepresentable(20, true), (std::set<std::uint64_t>{1, 2, 6, 8, 12, 20}));
  EXPECT_DOUBLE_EQ(phi.back().ratio_to_reference, 6 / std::sqrt(20.0));
}

TEST(RepresentableCount, MatchesBruteForceAndIsMonotone) {
  const std::uint64_t x = 3000;
  for (bool totient : {false, true}) {
    const SieveTable t = Sieve(totient ? SieveKind::kTotient : SieveKind::kOmega, x);
    std::vector<std::uint64_t> cps;
    for (std::uint64_t c = 50; c <= x; c += 50) cps.push_back(c);
    const auto got = RepresentableCount(t, cps);
    const auto all = NaiveRepresentable(x, totient);
    std::uint64_t prev = 0;
    for (const auto& cp : got) {
      const auto expected = static_cast<std::uint64_t>(std::distance(all.begin(), all.upper_bound(cp.x)));
      EXPECT_EQ(cp.count, expected) << cp.x;
      EXPECT_GE(cp.count, prev);
      EXPECT_LE(cp.count, cp.x);
      prev = cp.count;
    }
  }
}

TEST(RepresentableCount, CheckpointsAndErrors) {
  const auto cps = RepresentableCount(Sieve(SieveKind::kTotient, 12'345), 12'345);
  std::vector<std::uint64_t> xs;
  for (const auto& c : cps) xs.push_back(c.x);
  EXPECT_EQ(xs, (std::vector<std::uint64_t>{10, 100, 1000, 10'000, 12'345}));
  EXPECT_THROW(RepresentableCount(Sieve(SieveKind::kTotient, 100), 1000), ConfigError);
  EXPECT_THROW(RepresentableCount(Sieve(SieveKind::kPrimes, 100), 100), ConfigError);
}

}  // namespace
}  // namespace dirset
