#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "dirset/error.h"
#include "dirset/intsets.h"

namespace dirset {
namespace {

using Values = std::vector<std::uint64_t>;

IntegerSetSpec S(const char* text) { return ParseSetSpec(text); }

TEST(Enumerate, SpecExamples) {
  EXPECT_EQ(Enumerate(S("blocks:q=5:1-2"), 30), (Values{1, 5, 6, 7, 8, 9, 25, 26, 27, 28, 29, 30}));
  EXPECT_EQ(Enumerate(S("perfect-powers"), 30), (Values{8, 16, 27}));
  EXPECT_EQ(Enumerate(S("poly:L=4:x1^2+x2^2"), 10), (Values{2, 5, 8, 10}));
  EXPECT_EQ(Enumerate(S("n-omega"), 20), (Values{2, 3, 4, 5, 7, 8, 9, 11, 12, 13, 16, 17, 19, 20}));
  EXPECT_EQ(Enumerate(S("n-phi"), 20), (Values{1, 2, 6, 8, 12, 20}));
  EXPECT_EQ(Enumerate(S("two-three-powers"), 100), (Values{4, 8, 9, 16, 27, 32, 64, 81}));
  EXPECT_EQ(Enumerate(S("primes-ap:m=4:a=3"), 20), (Values{3, 7, 11, 19}));
  EXPECT_EQ(Enumerate(S("naturals"), 5), (Values{1, 2, 3, 4, 5}));
  EXPECT_EQ(Enumerate(S("explicit:2,3,7"), 5), (Values{2, 3}));
}

// Independent brute-force membership for each family.
bool NaiveContains(const std::string& family, std::uint64_t n) {
  auto omega = [](std::uint64_t m) {
    std::uint64_t c = 0;
    for (std::uint64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        ++c;
        while (m % p == 0) m /= p;
      }
    return c + (m > 1 ? 1 : 0);
  };
  auto phi = [](std::uint64_t m) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= m; ++k) c += std::gcd(k, m) == 1 ? 1 : 0;
    return c;
  };
  if (family == "blocks:q=5:1-2") {
    for (std::uint64_t p = 1; p <= n; p *= 5)
      if (n >= p && n < 2 * p) return true;
    return false;
  }
  if (family == "perfect-powers") {
    for (std::uint64_t m = 2; m * m * m <= n; ++m)
      for (std::uint64_t v = m * m * m; v <= n; v *= m)
        if (v == n) return true;
    return false;
  }
  if (family == "n-omega") {
    for (std::uint64_t k = 1; k <= n; ++k)
      if (n % k == 0 && k * omega(k) == n) return true;
    return false;
  }
  if (family == "n-phi") {
    for (std::uint64_t k = 1; k <= n; ++k)
      if (n % k == 0 && k * phi(k) == n) return true;
    return false;
  }
  if (family == "two-three-powers") {
    for (std::uint64_t b : {2u, 3u})
      for (std::uint64_t v = b * b; v <= n; v *= b)
        if (v == n) return true;
    return false;
  }
  if (family == "primes-ap:m=4:a=1") {
    if (n < 2 || n % 4 != 1) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
  ADD_FAILURE() << family;
  return false;
}

TEST(Enumerate, MatchesBruteForce) {
  for (const char* family :
       {"blocks:q=5:1-2", "perfect-powers", "n-omega", "n-phi", "two-three-powers", "primes-ap:m=4:a=1"}) {
    const Values got = Enumerate(S(family), 1500);
    Values expected;
    for (std::uint64_t n = 1; n <= 1500; ++n)
      if (NaiveContains(family, n)) expected.push_back(n);
    EXPECT_EQ(got, expected) << family;
  }
}

TEST(Enumerate, PolynomialImageOverLatticeBox) {
  const IntegerSetSpec spec = S("poly:L=6:x1*x2-5");
  std::set<std::uint64_t> expected;
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b)
      if (a * b - 5 >= 1 && a * b - 5 <= 40) expected.insert(static_cast<std::uint64_t>(a * b - 5));
  EXPECT_EQ(Enumerate(spec, 40), Values(expected.begin(), expected.end()));
  EXPECT_FALSE(EnumerationNotes(spec, 40, expected.size()).empty());
  const IntegerSetSpec negative = S("poly:L=5:-1*x1^2");
  EXPECT_TRUE(Enumerate(negative, 100).empty());
  EXPECT_FALSE(EnumerationNotes(negative, 100, 0).empty());
}

TEST(Enumerate, PrefixProperty) {
  for (const char* family : {"blocks:q=5:1-2", "perfect-powers", "n-omega", "n-phi", "two-three-powers", "primes",
                             "poly:L=30:x1^2+x2^2:diag", "blocks:q=7:3/2-5/2"}) {
    const Values big = Enumerate(S(family), 20'000);
    for (std::uint64_t x : {1u, 17u, 999u, 4096u, 12'345u}) {
      const Values small = Enumerate(S(family), x);
      ASSERT_LE(small.size(), big.size());
      EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin())) << family << " " << x;
      EXPECT_TRUE(big.size() == small.size() || big[small.size()] > x);
    }
    EXPECT_TRUE(std::is_sorted(big.begin(), big.end()));
    EXPECT_EQ(std::adjacent_find(big.begin(), big.end()), big.end());
  }
}

TEST(Contains, AgreesWithEnumerate) {
  std::mt19937_64 rng(2);
  for (const char* family : {"blocks:q=5:1-2", "perfect-powers", "n-omega", "n-phi", "two-three-powers", "primes",
                             "primes-ap:m=4:a=3", "poly:L=100:x1^2+x2^2", "explicit:3,9,27"}) {
    const IntegerSetSpec spec = S(family);
    const Values all = Enumerate(spec, 200'000);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t n = 1 + rng() % 200'000;
      ASSERT_EQ(Contains(spec, n), std::binary_search(all.begin(), all.end(), n)) << family << " " << n;
    }
    for (std::uint64_t n : all) ASSERT_TRUE(Contains(spec, n)) << family << " " << n;
  }
  EXPECT_FALSE(Contains(S("blocks:q=5:1-2"), 10));
  EXPECT_TRUE(Contains(S("perfect-powers"), 64));
  EXPECT_TRUE(Contains(S("two-three-powers"), 4));
  EXPECT_FALSE(Contains(S("two-three-powers"), 2));
}

TEST(BlockUnion, ThreeBandsPartitionTheNaturals) {
  const Values a = Enumerate(S("blocks:q=5:1-2"), 100'000);
  const Values b = Enumerate(S("blocks:q=5:2-3"), 100'000);
  const Values c = Enumerate(S("blocks:q=5:3-5"), 100'000);
  std::vector<int> hits(100'001, 0);
  for (const Values* part : {&a, &b, &c})
    for (std::uint64_t n : *part) ++hits[n];
  for (std::uint64_t n = 1; n <= 100'000; ++n) ASSERT_EQ(hits[n], 1) << n;
}

TEST(DiagonalSequence, Examples) {
  EXPECT_EQ(DiagonalSequence(std::get<PolynomialImage>(S("poly:L=1:x1^2+x2^2")), 4), (Values{2, 8, 18, 32}));
  EXPECT_EQ(DiagonalSequence(std::get<PolynomialImage>(S("poly:L=1:x1*x2-5")), 3), (Values{4, 11, 20}));
  EXPECT_THROW(DiagonalSequence(std::get<PolynomialImage>(S("poly:L=1:-1*x1^2+x2")), 3), ConfigError);
  EXPECT_THROW(DiagonalSequence(std::get<PolynomialImage>(S("poly:L=1:m=2:7")), 3), ConfigError);
}

TEST(DiagonalSequence, ConsecutiveRatiosApproachOne) {
  for (const char* f : {"x1^2+x2^2", "x1*x2-5", "x1^3-x2^2+x3", "2*x1^2-x2^2+3*x1"}) {
    const PolynomialImage p = std::get<PolynomialImage>(ParseSetSpec(std::string("poly:L=1:") + f));
    const unsigned d = p.f.TotalDegree();
    const Values g = DiagonalSequence(p, 10'000);
    const double ratio = static_cast<double>(g[g.size() - 2]) / static_cast<double>(g.back());
    EXPECT_LE(1.0 - ratio, 2.0 * d / 1e4 + 1e-6) << f;
  }
}

TEST(Explicit, ParseAndLoad) {
  const Explicit e = ParseExplicit("# header\n1\n\n5\n  9\n");
  EXPECT_EQ(e.values, (Values{1, 5, 9}));
  try {
    ParseExplicit("1\n3\n3\n");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 3u);
  }
  EXPECT_THROW(ParseExplicit("4\n2\n"), ParseError);
  EXPECT_THROW(ParseExplicit("0\n"), ParseError);
  EXPECT_THROW(ParseExplicit("x\n"), ParseError);
  const auto path = std::filesystem::temp_directory_path() / "dirset_explicit_test.txt";
  std::ofstream(path) << "2\n4\n8\n";
  const IntegerSetSpec spec = ParseSetSpec("file:" + path.string());
  EXPECT_EQ(Enumerate(spec, 5), (Values{2, 4}));
  EXPECT_EQ(FormatSetSpec(spec), "file:" + path.string());
  std::filesystem::remove(path);
  EXPECT_THROW(LoadExplicit("/nonexistent/dirset.txt"), ConfigError);
}

TEST(Validate, RejectsMalformedSpecs) {
  EXPECT_THROW(ParseSetSpec("blocks:q=1:1-2"), ConfigError);
  EXPECT_THROW(ParseSetSpec("blocks:q=5:2-1"), ConfigError);
  EXPECT_THROW(ParseSetSpec("primes-ap:m=4:a=2"), ConfigError);
  EXPECT_THROW(ParseSetSpec("perfect-powers:r=2"), ConfigError);
  EXPECT_THROW(ParseSetSpec("poly:L=0:x1^2"), ConfigError);
  EXPECT_THROW(ParseSetSpec("nonsense"), ConfigError);
  EXPECT_THROW(Validate(Explicit{{3, 2}, ""}), ConfigError);
}

TEST(SetSpecText, RoundTrips) {
  for (const char* text : {"naturals", "blocks:q=5:1-2,2-3", "primes", "primes-ap:m=4:a=1", "perfect-powers:r=4",
                           "n-omega", "n-phi", "two-three-powers", "explicit:1,2,3", "poly:L=100:m=2:x1^2+x2^2:diag",
                           "blocks:q=7:3/2-5/2"}) {
    const IntegerSetSpec spec = ParseSetSpec(text);
    EXPECT_EQ(ParseSetSpec(FormatSetSpec(spec)), spec) << text;
  }
  EXPECT_EQ(FormatSetSpec(ParseSetSpec("blocks:q=5:1-2")), "blocks:q=5:1-2");
  EXPECT_EQ(ParseSetSpec("blocks:q=5:1-2.5"), ParseSetSpec("blocks:q=5:1-5/2"));
}

}  // namespace
}  // namespace dirset
