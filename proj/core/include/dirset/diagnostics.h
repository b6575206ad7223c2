#ifndef DIRSET_DIAGNOSTICS_H_
#define DIRSET_DIAGNOSTICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dirset/direction.h"
#include "dirset/geometry.h"
#include "dirset/intsets.h"
#include "dirset/rational.h"

namespace dirset {

// ---------------------------------------------------------------------------
// Natural density

struct DensityCheckpoint {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  double ratio = 0.0;  // count / x
};

enum class DensityVerdict { kConverging, kOscillating, kInconclusive };

std::string_view ToString(DensityVerdict verdict);

// Two ratios closer than this are "equal" for the converging verdict.
inline constexpr double kConvergenceTolerance = 0.01;
// Oscillation needs one ratio above some earlier one and one ratio below
// some earlier one, each by more than this.
inline constexpr double kOscillationMargin = 0.05;

struct DensityEstimate {
  std::vector<DensityCheckpoint> checkpoints;
  DensityVerdict verdict = DensityVerdict::kInconclusive;
  double limit = 0.0;            // kConverging: the last ratio
  double low = 0.0, high = 0.0;  // kOscillating: range of all ratios
};

// Counts A(X) at each checkpoint. The verdict is converging when the last
// three ratios pairwise differ by < kConvergenceTolerance, otherwise
// oscillating when the ratios move both up and down by more than
// kOscillationMargin (against some earlier ratio), otherwise inconclusive. Requires at least three
// checkpoints, ascending, the largest >= 100.
DensityEstimate EstimateDensity(const IntegerSetSpec& spec, std::span<const std::uint64_t> checkpoints);

// ---------------------------------------------------------------------------
// Consecutive-ratio profile

struct RatioProfile {
  std::uint64_t bound = 0;
  std::size_t window = 0;
  double min_ratio = 0.0, max_ratio = 0.0, mean_ratio = 0.0;
  // Consecutive pair (a_n, a_{n+1}) attaining the minimum, for exact checks.
  std::uint64_t min_numerator = 0, min_denominator = 0;
  double threshold = 0.0;  // 1 - 10 / window
  bool approaches_one = false;
};

// Ratios a_n / a_{n+1} of the last `window` consecutive pairs of elements
// <= bound. approaches_one holds iff the minimum is >= 1 - 10 / window.
// Throws ConfigError if fewer than window + 1 elements are <= bound.
RatioProfile ComputeRatioProfile(const IntegerSetSpec& spec, std::uint64_t bound, std::size_t window);
RatioProfile ComputeRatioProfile(std::span<const std::uint64_t> elements, std::uint64_t bound,
                                 std::size_t window);

// ---------------------------------------------------------------------------
// Epsilon coverage

struct UncoveredProbe {
  std::size_t index = 0;
  std::vector<double> coords;
  bool axis_adjacent = false;
};

struct CoverageReport {
  double epsilon = 0.0;
  std::size_t probe_count = 0;
  std::size_t covered_count = 0;
  double fraction = 0.0;
  // Same statistics over probes that are not within epsilon of a
  // coordinate hyperplane.
  std::size_t interior_probe_count = 0;
  std::size_t interior_covered_count = 0;
  double interior_fraction = 0.0;
  std::size_t uncovered_count = 0;
  std::vector<UncoveredProbe> uncovered;  // first `uncovered_cap` in probe order
  std::vector<bool> covered;              // per probe
};

struct CoverageOptions {
  std::size_t uncovered_cap = 100;
  unsigned workers = 0;
};

// A probe is covered iff some point lies within Euclidean distance epsilon.
// The search is exact: probes are bucketed in a grid of cell size epsilon
// and every point is compared against all probes in the 3^k cells around
// it. `points` holds dim values per point.
CoverageReport Coverage(std::span<const double> points, std::size_t dim, double epsilon,
                        std::span<const DirectionPoint> probes, const CoverageOptions& options = {});
CoverageReport Coverage(const DirectionSetTruncation& truncation, double epsilon,
                        std::span<const DirectionPoint> probes, const CoverageOptions& options = {});

// ---------------------------------------------------------------------------
// Ratio gaps

enum class GapScanMode {
  // Visits every ordered pair individually; refuses more than
  // kMaxPairScan pairs.
  kPairScan,
  // Groups the set into runs of consecutive integers and marks whole ranges
  // of ratios at once; cost grows with (elements x runs).
  kIntervalSieve,
};

inline constexpr std::uint64_t kMaxPairScan = 100'000'000;

std::string_view ToString(GapScanMode mode);

struct RatioGap {
  Rational left, right;
  bool left_is_ratio = false;   // false: left is the scan boundary
  bool right_is_ratio = false;
};

struct GapReport {
  Rational low, high;
  std::uint64_t resolution = 0;
  std::uint64_t bound = 0;
  std::size_t element_count = 0;
  GapScanMode mode = GapScanMode::kPairScan;
  // Every maximal open sub-interval of (low, high) of width at least
  // (high - low) / resolution that contains no ratio a / b with a, b in the
  // set and <= bound. Ascending.
  std::vector<RatioGap> gaps;
};

// Exact ratio-gap scan. Throws ConfigError when fewer than two elements are
// <= bound or the interval is empty, and ResourceError in kPairScan mode
// when the number of pairs exceeds kMaxPairScan.
GapReport RatioGaps(const IntegerSetSpec& spec, std::uint64_t bound, const Rational& low,
                    const Rational& high, std::uint64_t resolution,
                    GapScanMode mode = GapScanMode::kPairScan);
GapReport RatioGaps(std::span<const std::uint64_t> elements, std::uint64_t bound,
                    const Rational& low, const Rational& high, std::uint64_t resolution,
                    GapScanMode mode = GapScanMode::kPairScan);

// ---------------------------------------------------------------------------
// Accumulation points and closure

struct AccumulationApprox {
  std::vector<std::uint64_t> ladder;
  double epsilon = 0.0;
  bool distinct = false;
  std::size_t dim = 0;
  std::size_t base_size = 0;  // points in the truncation at the first rung
  // Points of the first-rung truncation that, at every rung, have another
  // direction of that rung's truncation within epsilon. Sorted.
  std::vector<PrimitiveDirection> points;
  // |U_i cap [1, top rung]| per set.
  std::vector<std::size_t> top_counts;
};

struct AccumulationOptions {
  unsigned workers = 0;
};

// Throws ConfigError for a ladder that is not strictly increasing or has
// fewer than three rungs, or when some rung has an empty truncation.
AccumulationApprox EstimateAccumulation(std::span<const IntegerSetSpec> specs,
                                        std::span<const std::uint64_t> ladder, double epsilon,
                                        bool distinct, const AccumulationOptions& options = {});

struct PermutationViolation {
  PrimitiveDirection point;
  Permutation permutation;
};

struct ProjectionViolation {
  PrimitiveDirection point;
  IndexSubset subset;
};

struct ClosureReport {
  double tolerance = 0.0;  // 2 epsilon
  std::size_t point_count = 0;
  bool permutation_checked = false;
  std::string permutation_note;
  std::size_t permutations_tested = 0;  // non-identity permutations
  std::size_t permutation_violation_count = 0;
  std::vector<PermutationViolation> permutation_violations;  // capped
  bool projection_checked = false;
  std::string projection_note;
  std::size_t projections_tested = 0;
  std::size_t projection_violation_count = 0;
  std::vector<ProjectionViolation> projection_violations;  // capped
};

// Permutations that only exchange coordinates whose sets are equal,
// excluding the identity.
std::vector<Permutation> AdmissiblePermutations(std::span<const IntegerSetSpec> specs);

// For every approximated accumulation point x: each admissible permutation
// of x, and rho_I(x) for each index subset I meeting x, must lie within
// 2 epsilon of some approximated point. The projection part is skipped when
// some set has fewer than k elements up to the top rung.
ClosureReport ClosureChecks(const AccumulationApprox& approx, std::span<const IntegerSetSpec> specs,
                            std::size_t violation_cap = 100);

// ---------------------------------------------------------------------------
// Three-term arithmetic progressions

using Progression = std::array<std::uint64_t, 3>;

// Every a < b < c in the set, all <= bound, with a + c = 2b, in
// lexicographic order.
std::vector<Progression> FindThreeTermAps(const IntegerSetSpec& spec, std::uint64_t bound);
std::vector<Progression> FindThreeTermAps(std::span<const std::uint64_t> elements);

}  // namespace dirset

#endif  // DIRSET_DIAGNOSTICS_H_
