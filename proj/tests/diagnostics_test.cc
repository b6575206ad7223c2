#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "dirset/diagnostics.h"
#include "dirset/error.h"

namespace dirset {
namespace {

using Values = std::vector<std::uint64_t>;

IntegerSetSpec S(const char* text) { return ParseSetSpec(text); }

// ---------------------------------------------------------------------------
// Density

TEST(Density, Examples) {
  const Values cps = {10'000, 100'000, 1'000'000};
  const auto naturals = EstimateDensity(S("naturals"), cps);
  EXPECT_EQ(naturals.verdict, DensityVerdict::kConverging);
  EXPECT_DOUBLE_EQ(naturals.limit, 1.0);
  Explicit evens;
  for (std::uint64_t n = 2; n <= 1'000'000; n += 2) evens.values.push_back(n);
  const auto even = EstimateDensity(evens, cps);
  EXPECT_EQ(even.verdict, DensityVerdict::kConverging);
  EXPECT_DOUBLE_EQ(even.limit, 0.5);
  const auto squares = EstimateDensity(S("poly:L=1000:x1^2"), cps);
  EXPECT_EQ(squares.verdict, DensityVerdict::kConverging);
  EXPECT_NEAR(squares.limit, 0.0, 0.01);
}

TEST(Density, BlockUnionOscillates) {
  // |A cap [1, 5^7]| = 1 + sum_{j<7} 5^j, |A cap [1, 2 5^7)| adds 5^7 more.
  const std::uint64_t p = 78'125;
  const Values cps = {p, 2 * p - 1, 5 * p, 10 * p - 1, 25 * p};
  const auto e = EstimateDensity(S("blocks:q=5:1-2"), cps);
  EXPECT_EQ(e.verdict, DensityVerdict::kOscillating);
  std::uint64_t closed = 1;
  for (std::uint64_t q = 1; q < p; q *= 5) closed += q;
  EXPECT_EQ(e.checkpoints[0].count, closed);
  EXPECT_EQ(e.checkpoints[1].count, closed + p - 1);
  EXPECT_NEAR(e.low, 0.25, 0.01);
  EXPECT_NEAR(e.high, 0.625, 0.01);
}

TEST(Density, FullBlockUnionConverges) {
  for (const char* spec : {"blocks:q=5:1-2,2-3,3-5", "blocks:q=3:1-3", "blocks:q=7:1-7/2,7/2-7"}) {
    const auto e = EstimateDensity(S(spec), Values{1000, 10'000, 100'000});
    EXPECT_EQ(e.verdict, DensityVerdict::kConverging) << spec;
    EXPECT_NEAR(e.limit, 1.0, 0.01) << spec;
  }
}

TEST(Density, MonotoneDriftIsNotOscillation) {
  const auto primes = EstimateDensity(S("primes"), Values{10, 100, 1000, 10'000, 100'000});
  EXPECT_EQ(primes.verdict, DensityVerdict::kInconclusive);
  // Falling then rising back is.
  const auto blocks = EstimateDensity(S("blocks:q=5:1-2"), Values{78'125, 156'249, 390'625});
  EXPECT_EQ(blocks.verdict, DensityVerdict::kOscillating);
}

TEST(Density, Errors) {
  EXPECT_THROW(EstimateDensity(S("primes"), Values{100, 1000}), ConfigError);
  EXPECT_THROW(EstimateDensity(S("primes"), Values{10, 20, 50}), ConfigError);
  EXPECT_THROW(EstimateDensity(S("primes"), Values{100, 50, 1000}), ConfigError);
}

// ---------------------------------------------------------------------------
// Ratio profile

TEST(RatioProfile, Squares) {
  const auto p = ComputeRatioProfile(S("poly:L=200:x1^2"), 10'000, 10);
  // Last ten consecutive pairs are (n^2, (n+1)^2) for n = 90..99.
  double expected_min = 2.0;
  for (int n = 90; n <= 99; ++n) expected_min = std::min(expected_min, std::pow(n / (n + 1.0), 2));
  EXPECT_NEAR(p.min_ratio, expected_min, 1e-15);
  EXPECT_EQ(p.min_numerator, 8100u);
  EXPECT_EQ(p.min_denominator, 8281u);
  EXPECT_DOUBLE_EQ(p.threshold, 0.0);
  EXPECT_TRUE(p.approaches_one);
}

TEST(RatioProfile, Primes) {
  const auto p = ComputeRatioProfile(S("primes"), 1'000'000, 100);
  EXPECT_TRUE(p.approaches_one);
  // Prime gaps below 10^6 are at most 114.
  EXPECT_GE(p.min_ratio, 1.0 - 114.0 / 990'000.0);
}

TEST(RatioProfile, ThreeBlocksStayBelowTwoThirds) {
  const Values a = Enumerate(S("blocks:q=3:1-2"), 1'000'000);
  for (std::uint64_t b = 9; b <= 1'000'000; b *= 3) {
    const auto count = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), b) - a.begin());
    const auto p = ComputeRatioProfile(a, b, std::min<std::size_t>(10, count - 1));
    EXPECT_LE(3 * p.min_numerator, 2 * p.min_denominator);
  }
}

TEST(RatioProfile, TooFewElements) {
  EXPECT_THROW(ComputeRatioProfile(S("explicit:1,2,3"), 10, 3), ConfigError);
}

// ---------------------------------------------------------------------------
// Coverage

TEST(Coverage, Example) {
  const std::vector<DirectionPoint> probes = {DirectionPoint({1, 0}), DirectionPoint({0.6, 0.8}),
                                              DirectionPoint({0, 1})};
  const std::vector<double> pts = {0.6, 0.8};
  const auto r = Coverage(pts, 2, 0.05, probes);
  EXPECT_DOUBLE_EQ(r.fraction, 1.0 / 3.0);
  ASSERT_EQ(r.uncovered.size(), 2u);
  EXPECT_EQ(r.uncovered[0].index, 0u);
  EXPECT_EQ(r.uncovered[1].index, 2u);
  EXPECT_TRUE(r.uncovered[0].axis_adjacent);
}

TEST(Coverage, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (std::size_t k : {2u, 3u, 4u}) {
    const auto probes = ProbeGrid(k, k == 2 ? 400 : 12);
    for (double eps : {0.003, 0.02, 0.1, 0.4}) {
      std::vector<double> pts;
      for (int i = 0; i < 300; ++i) {
        std::vector<std::uint64_t> t(k);
        for (auto& v : t) v = rng() % 40;
        t[rng() % k] += 1;
        const auto p = Rho(t);
        pts.insert(pts.end(), p.coords().begin(), p.coords().end());
      }
      CoverageOptions opt;
      opt.workers = 3;
      const auto r = Coverage(pts, k, eps, probes, opt);
      std::size_t covered = 0;
      for (std::size_t j = 0; j < probes.size(); ++j) {
        bool hit = false;
        for (std::size_t i = 0; i < pts.size() / k && !hit; ++i)
          hit = Distance(std::span<const double>(pts).subspan(i * k, k), probes[j].coords()) <= eps;
        ASSERT_EQ(static_cast<bool>(r.covered[j]), hit) << k << " " << eps << " " << j;
        covered += hit;
      }
      EXPECT_EQ(r.covered_count, covered);
      EXPECT_DOUBLE_EQ(r.fraction, static_cast<double>(covered) / static_cast<double>(probes.size()));
    }
  }
}

TEST(Coverage, MonotoneInBoundAndEpsilon) {
  const std::vector<IntegerSetSpec> specs(2, S("primes"));
  const auto probes = ProbeGrid(2, 500);
  double last = 0.0;
  for (std::uint64_t x : {30u, 100u, 300u, 1000u}) {
    const auto t = BuildTruncation(specs, x, false);
    const double f = Coverage(t, 0.01, probes).fraction;
    EXPECT_GE(f, last);
    last = f;
    double last_eps = 0.0;
    for (double eps : {0.001, 0.005, 0.02, 0.08}) {
      const double g = Coverage(t, eps, probes).fraction;
      EXPECT_GE(g, last_eps);
      last_eps = g;
    }
  }
}

TEST(Coverage, PrimesAtTenThousand) {
  const auto t = BuildTruncation(std::vector<IntegerSetSpec>(2, S("primes")), 10'000, false);
  EXPECT_GE(Coverage(t, 0.02, ProbeGrid(2, 500)).fraction, 0.99);
}

TEST(Coverage, BlockUnionArcStaysUncovered) {
  const auto probes = ProbeGrid(2, 3000);
  for (std::uint64_t x : {200u, 2000u, 10'000u}) {
    const auto t = BuildTruncation(std::vector<IntegerSetSpec>(2, S("blocks:q=5:1-2")), x, false);
    const auto r = Coverage(t, 0.0049, probes);
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const double ratio = probes[j][0] / probes[j][1];
      if (probes[j][1] > 0 && ratio >= 2.05 && ratio <= 2.45) EXPECT_FALSE(r.covered[j]);
    }
  }
}

TEST(Coverage, Errors) {
  const std::vector<double> pts = {0.6, 0.8};
  EXPECT_THROW(Coverage(pts, 2, 0.0, ProbeGrid(2, 3)), ConfigError);
  EXPECT_THROW(Coverage(pts, 2, 0.1, {}), ConfigError);
}

// ---------------------------------------------------------------------------
// Ratio gaps

// Every ratio a / b in (lo, hi), exact and sorted.
std::vector<Rational> AllRatios(const Values& v, const Rational& lo, const Rational& hi) {
  std::set<Rational> out;
  for (std::uint64_t a : v)
    for (std::uint64_t b : v) {
      const Rational r(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
      if (lo < r && r < hi) out.insert(r);
    }
  return {out.begin(), out.end()};
}

// Maximal empty sub-intervals of (lo, hi) no narrower than `width`.
std::vector<std::pair<Rational, Rational>> OracleGaps(const Values& v, const Rational& lo, const Rational& hi,
                                                      std::uint64_t resolution) {
  const auto r = AllRatios(v, lo, hi);
  const Rational width = (hi - lo) / Rational(static_cast<std::int64_t>(resolution));
  std::vector<std::pair<Rational, Rational>> out;
  Rational prev = lo;
  for (const auto& x : r) {
    if (x - prev >= width) out.emplace_back(prev, x);
    prev = x;
  }
  if (hi - prev >= width) out.emplace_back(prev, hi);
  return out;
}

void ExpectMatchesOracle(const Values& v, const Rational& lo, const Rational& hi, std::uint64_t res,
                         GapScanMode mode) {
  const GapReport g = RatioGaps(v, v.back(), lo, hi, res, mode);
  const auto expected = OracleGaps(v, lo, hi, res);
  ASSERT_EQ(g.gaps.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(g.gaps[i].left, expected[i].first);
    EXPECT_EQ(g.gaps[i].right, expected[i].second);
  }
}

TEST(RatioGaps, Examples) {
  const GapReport pow2 = RatioGaps(Values{1, 2, 4, 8, 16, 32, 64}, 64, Rational(1), Rational(2), 10);
  ASSERT_EQ(pow2.gaps.size(), 1u);
  EXPECT_EQ(pow2.gaps[0].left, Rational(1));
  EXPECT_EQ(pow2.gaps[0].right, Rational(2));
  EXPECT_FALSE(pow2.gaps[0].left_is_ratio);
  EXPECT_FALSE(pow2.gaps[0].right_is_ratio);

  Values nat(100);
  std::iota(nat.begin(), nat.end(), 1);
  // Nothing wider than 1/50; the last step below 2 is 99/50 and has exactly that width.
  const GapReport n = RatioGaps(nat, 100, Rational(1), Rational(2), 50);
  for (const auto& gap : n.gaps) EXPECT_LE(gap.right - gap.left, Rational(1, 50));
  ASSERT_EQ(n.gaps.size(), 1u);
  EXPECT_EQ(n.gaps[0].left, Rational(99, 50));

  const GapReport a = RatioGaps(S("blocks:q=5:1-2"), 10'000, Rational(3, 2), Rational(3), 100);
  bool contains = false;
  for (const auto& gap : a.gaps) contains = contains || (gap.left < Rational(2) && Rational(5, 2) < gap.right);
  EXPECT_TRUE(contains);
}

TEST(RatioGaps, AgreeWithBruteForceInBothModes) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Values v;
    const int density = 2 + static_cast<int>(rng() % 6);
    for (std::uint64_t n = 1; n <= 300; ++n)
      if (rng() % density == 0 || (n > 100 && n < 130)) v.push_back(n);
    const Rational lo(1 + static_cast<std::int64_t>(rng() % 3), 2);
    const Rational hi = lo + Rational(1 + static_cast<std::int64_t>(rng() % 4));
    const std::uint64_t res = 10 + rng() % 300;
    ExpectMatchesOracle(v, lo, hi, res, GapScanMode::kPairScan);
    ExpectMatchesOracle(v, lo, hi, res, GapScanMode::kIntervalSieve);
  }
  for (const char* spec : {"blocks:q=5:1-2", "blocks:q=5:2-3", "blocks:q=5:3-5", "blocks:q=3:1-2"}) {
    const Values v = Enumerate(S(spec), 700);
    ExpectMatchesOracle(v, Rational(1), Rational(4), 100, GapScanMode::kPairScan);
    ExpectMatchesOracle(v, Rational(1), Rational(4), 100, GapScanMode::kIntervalSieve);
  }
}

// The band argument: ratios within one block of [a q^j, b q^j) lie in
// (a/b, b/a), across blocks in (q^d a/b, q^d b/a). Windows between the bands
// are empty for every bound; the brute-force scan below confirms them.
TEST(RatioGaps, PartitionWindowsAgreeWithBands) {
  struct Case {
    const char* spec;
    Rational lo, hi;
  };
  for (const Case& c : {Case{"blocks:q=5:1-2", Rational(2), Rational(5, 2)},
                        Case{"blocks:q=5:2-3", Rational(3, 2), Rational(10, 3)},
                        Case{"blocks:q=5:3-5", Rational(5, 3), Rational(3)}}) {
    const Values v = Enumerate(S(c.spec), 4000);
    for (std::uint64_t a : v)
      for (std::uint64_t b : v) {
        const Rational r(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
        ASSERT_FALSE(c.lo <= r && r <= c.hi) << a << "/" << b;
      }
    // The window is maximal: ratios approach both ends.
    const auto near = AllRatios(v, c.lo - Rational(1, 50), c.hi + Rational(1, 50));
    EXPECT_FALSE(near.empty());
    EXPECT_LT(near.front(), c.lo);
    EXPECT_GT(near.back(), c.hi);
  }
}

TEST(RatioGaps, IntervalSieveAtLargeBound) {
  const Values v = Enumerate(S("blocks:q=5:1-2"), 100'000);
  const GapReport g = RatioGaps(v, 100'000, Rational(1), Rational(4), 100, GapScanMode::kIntervalSieve);
  bool found = false;
  for (const auto& gap : g.gaps) {
    if (!(gap.left < Rational(2) && Rational(5, 2) < gap.right)) continue;
    found = true;
    // Independent second pass: for each b, the nearest a on either side of
    // the window must fall outside it.
    for (std::uint64_t b : v) {
      const auto lo = static_cast<std::uint64_t>(FloorTimes(gap.left, static_cast<std::int64_t>(b)));
      auto it = std::upper_bound(v.begin(), v.end(), lo);
      for (; it != v.end(); ++it) {
        const Rational r(static_cast<std::int64_t>(*it), static_cast<std::int64_t>(b));
        if (r <= gap.left) continue;
        ASSERT_GE(r, gap.right) << *it << "/" << b;
        break;
      }
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(RatioGaps(v, 100'000, Rational(1), Rational(4), 100, GapScanMode::kPairScan), ResourceError);
}

TEST(RatioGaps, Errors) {
  EXPECT_THROW(RatioGaps(Values{5}, 10, Rational(1), Rational(2), 10), ConfigError);
  EXPECT_THROW(RatioGaps(Values{1, 2}, 10, Rational(2), Rational(1), 10), ConfigError);
}

// ---------------------------------------------------------------------------
// Accumulation and closure

std::vector<IntegerSetSpec> Twice(const char* spec) { return std::vector<IntegerSetSpec>(2, S(spec)); }

TEST(Accumulation, FiniteSetHasNone) {
  const auto a = EstimateAccumulation(Twice("explicit:1,2"), Values{2, 10, 100}, 0.5, false);
  EXPECT_TRUE(a.points.empty());
  EXPECT_EQ(a.base_size, 3u);
  EXPECT_THROW(EstimateAccumulation(Twice("naturals"), Values{10, 100}, 0.1, false), ConfigError);
  EXPECT_THROW(EstimateAccumulation(Twice("naturals"), Values{10, 100, 50}, 0.1, false), ConfigError);
  EXPECT_THROW(EstimateAccumulation(Twice("explicit:1"), Values{10, 100, 1000}, 0.1, true), ConfigError);
}

// Reference for the persistence rule: a point survives rung 1 if another
// point of T_1 is within eps, and rung j if a direction of T_j that is not in
// T_{j-1} is within eps.
std::vector<PrimitiveDirection> OracleAccumulation(const std::vector<IntegerSetSpec>& specs, const Values& ladder,
                                                   double eps, bool distinct) {
  std::vector<std::vector<PrimitiveDirection>> rungs;
  for (std::uint64_t x : ladder) rungs.push_back(OracleTruncation(specs, x, distinct));
  std::vector<PrimitiveDirection> out;
  for (const auto& p : rungs[0]) {
    const auto x = p.ToPoint();
    bool alive = true;
    for (std::size_t r = 0; r < rungs.size() && alive; ++r) {
      bool near = false;
      for (const auto& q : rungs[r]) {
        if (r == 0 ? q == p : std::binary_search(rungs[r - 1].begin(), rungs[r - 1].end(), q)) continue;
        if (Distance(x, q.ToPoint()) <= eps) {
          near = true;
          break;
        }
      }
      alive = near;
    }
    if (alive) out.push_back(p);
  }
  return out;
}

TEST(Accumulation, MatchesReference) {
  struct Case {
    std::vector<IntegerSetSpec> specs;
    Values ladder;
    double eps;
    bool distinct;
  };
  const std::vector<Case> cases = {
      {Twice("naturals"), {10, 20, 40}, 0.05, false},
      {Twice("primes"), {30, 100, 300}, 0.02, true},
      {{S("blocks:q=5:1-2"), S("n-phi")}, {60, 200, 600}, 0.03, false},
      {std::vector<IntegerSetSpec>(3, S("two-three-powers")), {50, 200, 1000}, 0.1, true},
      {{S("primes"), S("naturals"), S("poly:L=10:x1^2")}, {15, 30, 60}, 0.08, false},
  };
  for (const auto& c : cases) {
    for (unsigned workers : {1u, 3u}) {
      const auto a = EstimateAccumulation(c.specs, c.ladder, c.eps, c.distinct, {workers});
      EXPECT_EQ(a.points, OracleAccumulation(c.specs, c.ladder, c.eps, c.distinct));
    }
  }
}

TEST(Accumulation, MonotoneInEpsilon) {
  std::vector<PrimitiveDirection> prev;
  for (double eps : {0.005, 0.01, 0.03, 0.1}) {
    const auto a = EstimateAccumulation(Twice("primes"), Values{100, 300, 1000}, eps, false);
    EXPECT_TRUE(std::includes(a.points.begin(), a.points.end(), prev.begin(), prev.end()));
    prev = a.points;
  }
}

TEST(Accumulation, NaturalsCoverTheArc) {
  const auto a = EstimateAccumulation(Twice("naturals"), Values{100, 1000, 10'000}, 0.01, false);
  std::vector<double> pts;
  for (const auto& p : a.points) {
    const auto x = p.ToPoint();
    pts.insert(pts.end(), x.coords().begin(), x.coords().end());
  }
  EXPECT_GE(Coverage(pts, 2, 0.01, ProbeGrid(2, 500)).fraction, 0.99);
}

TEST(Accumulation, BlockUnionAvoidsTheGapArc) {
  const auto a = EstimateAccumulation(Twice("blocks:q=5:1-2"), Values{100, 1000, 10'000}, 0.01, false);
  EXPECT_FALSE(a.points.empty());
  for (const auto& p : a.points) {
    const Rational r(static_cast<std::int64_t>(p[0]), static_cast<std::int64_t>(p[1]));
    EXPECT_FALSE(Rational(2) <= r && r <= Rational(5, 2)) << p.ToString();
  }
}

TEST(Closure, NaturalsHaveNoViolations) {
  const auto specs = Twice("naturals");
  const auto a = EstimateAccumulation(specs, Values{100, 1000, 10'000}, 0.01, true);
  const auto r = ClosureChecks(a, specs);
  EXPECT_TRUE(r.permutation_checked);
  EXPECT_TRUE(r.projection_checked);
  EXPECT_EQ(r.permutations_tested, 1u);
  EXPECT_EQ(r.permutation_violation_count, 0u);
  EXPECT_EQ(r.projection_violation_count, 0u);
  EXPECT_TRUE(std::binary_search(a.points.begin(), a.points.end(),
                                 PrimitiveDirection::FromTuple(std::vector<std::uint64_t>{3, 4})));
  // rho_{1}(0.6, 0.8) = (1, 0) has an approximated point within 2 epsilon.
  const DirectionPoint axis = RhoProjection(DirectionPoint({0.6, 0.8}), IndexSubset({0}, 2));
  double best = 2.0;
  for (const auto& p : a.points) best = std::min(best, Distance(axis, p.ToPoint()));
  EXPECT_LE(best, 0.02);
}

TEST(Closure, MixedSpecsSkipPermutations) {
  const std::vector<IntegerSetSpec> specs = {S("primes-ap:m=4:a=1"), S("primes-ap:m=4:a=3")};
  EXPECT_TRUE(AdmissiblePermutations(specs).empty());
  const auto a = EstimateAccumulation(specs, Values{100, 300, 1000}, 0.05, false);
  const auto r = ClosureChecks(a, specs);
  EXPECT_FALSE(r.permutation_checked);
  EXPECT_FALSE(r.permutation_note.empty());
}

TEST(Closure, SmallSetsSkipProjections) {
  const auto specs = std::vector<IntegerSetSpec>(3, S("explicit:1,2"));
  const auto a = EstimateAccumulation(specs, Values{2, 3, 4}, 0.6, false);
  const auto r = ClosureChecks(a, specs);
  EXPECT_FALSE(r.projection_checked);
}

TEST(Closure, AdmissiblePermutationsRespectEqualSpecs) {
  const std::vector<IntegerSetSpec> specs = {S("primes"), S("naturals"), S("primes"), S("naturals")};
  const auto perms = AdmissiblePermutations(specs);
  EXPECT_EQ(perms.size(), 3u);  // 2! * 2! - 1
  for (const auto& p : perms)
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(specs[p.images()[i]], specs[i]);
  EXPECT_EQ(AdmissiblePermutations(std::vector<IntegerSetSpec>(3, S("primes"))).size(), 5u);
}

// ---------------------------------------------------------------------------
// Three-term progressions

std::set<Progression> OracleAps(const Values& v) {
  const std::unordered_set<std::uint64_t> members(v.begin(), v.end());
  std::set<Progression> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (members.contains(2 * v[j] - v[i])) out.insert({v[i], v[j], 2 * v[j] - v[i]});
  return out;
}

TEST(ThreeTermAps, Examples) {
  EXPECT_EQ(FindThreeTermAps(S("explicit:1,2,3,5"), 5), (std::vector<Progression>{{1, 2, 3}, {1, 3, 5}}));
  EXPECT_TRUE(FindThreeTermAps(S("two-three-powers"), 10'000).empty());
  EXPECT_THROW(FindThreeTermAps(S("primes"), 2), ConfigError);
}

TEST(ThreeTermAps, CubesAreFree) {
  EXPECT_TRUE(FindThreeTermAps(S("poly:L=100:x1^3"), 1'000'000).empty());
}

TEST(ThreeTermAps, MixedExponentPowersAreNot) {
  const auto aps = FindThreeTermAps(S("perfect-powers"), 1'000'000);
  ASSERT_FALSE(aps.empty());
  EXPECT_EQ(aps.front(), (Progression{81, 1728, 3375}));  // 3^4, 12^3, 15^3
}

TEST(ThreeTermAps, AgreesWithHashOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Values v;
    const std::uint64_t span = 100 + rng() % 5000;
    for (std::uint64_t n = 1; n <= span; ++n)
      if (rng() % (2 + trial) == 0) v.push_back(n);
    const auto got = FindThreeTermAps(v);
    EXPECT_EQ(std::set<Progression>(got.begin(), got.end()), OracleAps(v));
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
  for (const char* spec : {"perfect-powers", "two-three-powers", "primes", "blocks:q=5:1-2", "n-phi"}) {
    const Values v = Enumerate(S(spec), 20'000);
    const auto got = FindThreeTermAps(v);
    EXPECT_EQ(std::set<Progression>(got.begin(), got.end()), OracleAps(v)) << spec;
  }
}

}  // namespace
}  // namespace dirset
