#include "dirset/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cell_grid.h"
#include "dirset/error.h"
#include "dirset/parallel.h"

namespace dirset {

using internal::CellGrid;

// ---------------------------------------------------------------------------
// Natural density

std::string_view ToString(DensityVerdict verdict) {
  switch (verdict) {
    case DensityVerdict::kConverging: return "converging";
    case DensityVerdict::kOscillating: return "oscillating";
    case DensityVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

DensityEstimate EstimateDensity(const IntegerSetSpec& spec, std::span<const std::uint64_t> checkpoints) {
  if (checkpoints.size() < 3) throw ConfigError("density estimation needs at least 3 checkpoints");
  if (checkpoints.front() == 0 || std::adjacent_find(checkpoints.begin(), checkpoints.end(),
                                                     std::greater_equal<>()) != checkpoints.end())
    throw ConfigError("density checkpoints must be positive and strictly ascending");
  if (checkpoints.back() < 100) throw ConfigError("density estimation needs X >= 100");

  const std::vector<std::uint64_t> values = Enumerate(spec, checkpoints.back());
  DensityEstimate est;
  for (std::uint64_t x : checkpoints) {
    const auto count = static_cast<std::uint64_t>(std::upper_bound(values.begin(), values.end(), x) - values.begin());
    est.checkpoints.push_back({x, count, static_cast<double>(count) / static_cast<double>(x)});
  }
  const auto& c = est.checkpoints;
  const std::size_t n = c.size();
  const double r1 = c[n - 3].ratio, r2 = c[n - 2].ratio, r3 = c[n - 1].ratio;
  double lo = c[0].ratio, hi = c[0].ratio;
  for (const auto& cp : c) {
    lo = std::min(lo, cp.ratio);
    hi = std::max(hi, cp.ratio);
  }
  if (std::abs(r1 - r2) < kConvergenceTolerance && std::abs(r1 - r3) < kConvergenceTolerance &&
      std::abs(r2 - r3) < kConvergenceTolerance) {
    est.verdict = DensityVerdict::kConverging;
    est.limit = r3;
    return est;
  }
  // A monotone drift (primes, say) also leaves the hull of earlier ratios, so
  // oscillation needs an exit above it and an exit below it.
  double hull_lo = c[0].ratio, hull_hi = c[0].ratio;
  bool rose = false, fell = false;
  for (std::size_t i = 1; i < n; ++i) {
    const double r = c[i].ratio;
    rose = rose || r > hull_lo + kOscillationMargin;
    fell = fell || r < hull_hi - kOscillationMargin;
    hull_lo = std::min(hull_lo, r);
    hull_hi = std::max(hull_hi, r);
  }
  if (rose && fell) {
    est.verdict = DensityVerdict::kOscillating;
    est.low = lo;
    est.high = hi;
    return est;
  }
  est.verdict = DensityVerdict::kInconclusive;
  return est;
}

// ---------------------------------------------------------------------------
// Consecutive-ratio profile

RatioProfile ComputeRatioProfile(std::span<const std::uint64_t> elements, std::uint64_t bound,
                                 std::size_t window) {
  if (window == 0) throw ConfigError("ratio window must be >= 1");
  const auto end = std::upper_bound(elements.begin(), elements.end(), bound);
  const auto n = static_cast<std::size_t>(end - elements.begin());
  if (n < window + 1)
    throw ConfigError("ratio profile needs at least " + std::to_string(window + 1) + " elements <= " +
                      std::to_string(bound) + ", found " + std::to_string(n));
  RatioProfile p;
  p.bound = bound;
  p.window = window;
  p.threshold = 1.0 - 10.0 / static_cast<double>(window);
  double sum = 0.0;
  bool first = true;
  for (std::size_t i = n - window - 1; i + 1 < n; ++i) {
    const std::uint64_t a = elements[i], b = elements[i + 1];
    const double r = static_cast<double>(a) / static_cast<double>(b);
    sum += r;
    if (first || CompareFractions(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                  static_cast<std::int64_t>(p.min_numerator),
                                  static_cast<std::int64_t>(p.min_denominator)) == std::strong_ordering::less) {
      p.min_numerator = a;
      p.min_denominator = b;
      p.min_ratio = r;
    }
    p.max_ratio = first ? r : std::max(p.max_ratio, r);
    first = false;
  }
  p.mean_ratio = sum / static_cast<double>(window);
  p.approaches_one = p.min_ratio >= p.threshold;
  return p;
}

RatioProfile ComputeRatioProfile(const IntegerSetSpec& spec, std::uint64_t bound, std::size_t window) {
  const std::vector<std::uint64_t> values = Enumerate(spec, bound);
  return ComputeRatioProfile(values, bound, window);
}

// ---------------------------------------------------------------------------
// Epsilon coverage

CoverageReport Coverage(std::span<const double> points, std::size_t dim, double epsilon,
                        std::span<const DirectionPoint> probes, const CoverageOptions& options) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (probes.empty()) throw ConfigError("coverage needs at least one probe");
  std::vector<double> probe_coords;
  probe_coords.reserve(probes.size() * dim);
  for (const auto& p : probes) {
    if (p.dim() != dim) throw ConfigError("probe dimension does not match the point set");
    probe_coords.insert(probe_coords.end(), p.coords().begin(), p.coords().end());
  }
  const CellGrid grid(probe_coords, dim, epsilon);
  const std::size_t point_count = points.size() / dim;
  const unsigned workers = ResolveWorkers(options.workers);
  std::vector<std::vector<char>> hit(workers);
  ParallelChunks(point_count, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& mine = hit[w];
    mine.assign(probes.size(), 0);
    for (std::size_t i = begin; i < end; ++i) {
      const auto x = points.subspan(i * dim, dim);
      grid.ForEachNeighborCell(x, [&](std::uint64_t key) {
        for (std::uint32_t j : grid.Bucket(key)) {
          if (mine[j]) continue;
          if (Distance(x, std::span<const double>(probe_coords).subspan(j * dim, dim)) <= epsilon) mine[j] = 1;
        }
        return false;
      });
    }
  });

  CoverageReport r;
  r.epsilon = epsilon;
  r.probe_count = probes.size();
  r.covered.assign(probes.size(), false);
  for (const auto& mine : hit)
    for (std::size_t j = 0; j < mine.size(); ++j)
      if (mine[j]) r.covered[j] = true;
  for (std::size_t j = 0; j < probes.size(); ++j) {
    const bool axis = IsAxisAdjacent(probes[j].coords(), epsilon);
    if (!axis) ++r.interior_probe_count;
    if (r.covered[j]) {
      ++r.covered_count;
      if (!axis) ++r.interior_covered_count;
      continue;
    }
    ++r.uncovered_count;
    if (r.uncovered.size() < options.uncovered_cap)
      r.uncovered.push_back({j, std::vector<double>(probes[j].coords().begin(), probes[j].coords().end()), axis});
  }
  r.fraction = static_cast<double>(r.covered_count) / static_cast<double>(r.probe_count);
  r.interior_fraction = r.interior_probe_count == 0
                            ? 0.0
                            : static_cast<double>(r.interior_covered_count) / static_cast<double>(r.interior_probe_count);
  return r;
}

CoverageReport Coverage(const DirectionSetTruncation& truncation, double epsilon,
                        std::span<const DirectionPoint> probes, const CoverageOptions& options) {
  if (truncation.empty()) throw ConfigError("coverage of an empty truncation");
  const NormKind kind = probes.empty() ? NormKind::kEuclidean : probes.front().norm_kind();
  const std::vector<double> images = truncation.Images(kind);
  return Coverage(images, truncation.dim(), epsilon, probes, options);
}

// ---------------------------------------------------------------------------
// Ratio gaps

std::string_view ToString(GapScanMode mode) {
  return mode == GapScanMode::kPairScan ? "pair-scan" : "interval-sieve";
}

namespace {

using i128 = __int128;

// Maps ratios a / b in (low, high) to bins of equal width.
class RatioBins {
 public:
  RatioBins(const Rational& low, const Rational& high, std::uint64_t bins)
      : low_(low), span_(high - low), bins_(bins) {}

  std::uint64_t Count() const { return bins_; }

  // floor((a / b - low) * bins / span)
  std::uint64_t Of(std::uint64_t a, std::uint64_t b) const {
    const i128 num = (static_cast<i128>(a) * low_.den() - static_cast<i128>(low_.num()) * b) *
                     static_cast<i128>(bins_) * span_.den();
    const i128 den = static_cast<i128>(b) * low_.den() * span_.num();
    const auto bin = static_cast<std::uint64_t>(num / den);
    return std::min(bin, bins_ - 1);
  }

  // low + i * span / bins
  Rational Edge(std::uint64_t i) const {
    return low_ + span_ * Rational(static_cast<std::int64_t>(i), static_cast<std::int64_t>(bins_));
  }

  // True when consecutive ratios (a / b, (a + 1) / b) can skip no bin.
  bool StepFits(std::uint64_t b) const {
    // 1 / b <= span / bins  <=>  bins * span.den <= b * span.num
    return static_cast<i128>(bins_) * span_.den() <= static_cast<i128>(b) * span_.num();
  }

 private:
  Rational low_, span_;
  std::uint64_t bins_;
};

struct Run {
  std::uint64_t first, last;
};

std::vector<Run> Runs(std::span<const std::uint64_t> v, bool merge) {
  std::vector<Run> runs;
  for (std::uint64_t x : v) {
    if (merge && !runs.empty() && runs.back().last + 1 == x)
      runs.back().last = x;
    else
      runs.push_back({x, x});
  }
  return runs;
}

// Largest ratio a / b <= t with a / b > low (as a pair), or nothing.
std::optional<std::pair<std::uint64_t, std::uint64_t>> RatioAtMost(std::span<const std::uint64_t> v,
                                                                     const Rational& t, const Rational& low) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (std::uint64_t b : v) {
    const std::int64_t cap = FloorTimes(t, static_cast<std::int64_t>(b));
    if (cap < 1) continue;
    auto it = std::upper_bound(v.begin(), v.end(), static_cast<std::uint64_t>(cap));
    if (it == v.begin()) continue;
    const std::uint64_t a = *std::prev(it);
    if (CompareFractions(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), low.num(), low.den()) !=
        std::strong_ordering::greater)
      continue;
    if (!best || CompareFractions(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                  static_cast<std::int64_t>(best->first),
                                  static_cast<std::int64_t>(best->second)) == std::strong_ordering::greater)
      best = std::make_pair(a, b);
  }
  return best;
}

// Smallest ratio a / b >= t with a / b < high, or nothing.
std::optional<std::pair<std::uint64_t, std::uint64_t>> RatioAtLeast(std::span<const std::uint64_t> v,
                                                                      const Rational& t, const Rational& high) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (std::uint64_t b : v) {
    const std::int64_t floor_a = CeilTimes(t, static_cast<std::int64_t>(b));
    auto it = std::lower_bound(v.begin(), v.end(), static_cast<std::uint64_t>(std::max<std::int64_t>(floor_a, 1)));
    if (it == v.end()) continue;
    const std::uint64_t a = *it;
    if (CompareFractions(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), high.num(), high.den()) !=
        std::strong_ordering::less)
      continue;
    if (!best || CompareFractions(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                  static_cast<std::int64_t>(best->first),
                                  static_cast<std::int64_t>(best->second)) == std::strong_ordering::less)
      best = std::make_pair(a, b);
  }
  return best;
}

}  // namespace

GapReport RatioGaps(std::span<const std::uint64_t> all, std::uint64_t bound, const Rational& low,
                    const Rational& high, std::uint64_t resolution, GapScanMode mode) {
  const auto v = all.subspan(0, static_cast<std::size_t>(std::upper_bound(all.begin(), all.end(), bound) - all.begin()));
  if (v.size() < 2) throw ConfigError("ratio gaps need at least 2 elements <= " + std::to_string(bound));
  if (!(low < high)) throw ConfigError("scan interval must satisfy low < high");
  if (low < Rational(0)) throw ConfigError("scan interval must be non-negative");
  if (resolution == 0) throw ConfigError("gap resolution must be >= 1");
  const auto pairs = static_cast<double>(v.size()) * static_cast<double>(v.size());
  if (mode == GapScanMode::kPairScan && pairs > static_cast<double>(kMaxPairScan))
    throw ResourceError("pair scan over " + std::to_string(v.size()) + " elements exceeds " +
                        std::to_string(kMaxPairScan) + " pairs; use the interval-sieve mode");

  GapReport report;
  report.low = low;
  report.high = high;
  report.resolution = resolution;
  report.bound = bound;
  report.element_count = v.size();
  report.mode = mode;

  // Every gap of width >= span / resolution contains a whole bin of half
  // that width, so it shows up as a run of empty bins.
  const RatioBins bins(low, high, 2 * resolution);
  std::vector<std::int64_t> marks(bins.Count() + 1, 0);
  const std::vector<Run> runs = Runs(v, mode == GapScanMode::kIntervalSieve);
  for (std::uint64_t b : v) {
    const std::int64_t a_min = FloorTimes(low, static_cast<std::int64_t>(b)) + 1;
    const std::int64_t a_max = CeilTimes(high, static_cast<std::int64_t>(b)) - 1;
    if (a_max < a_min || a_max < 1) continue;
    auto it = std::lower_bound(runs.begin(), runs.end(), static_cast<std::uint64_t>(std::max<std::int64_t>(a_min, 1)),
                               [](const Run& r, std::uint64_t x) { return r.last < x; });
    for (; it != runs.end() && it->first <= static_cast<std::uint64_t>(a_max); ++it) {
      const std::uint64_t s = std::max<std::uint64_t>(it->first, static_cast<std::uint64_t>(a_min));
      const std::uint64_t e = std::min<std::uint64_t>(it->last, static_cast<std::uint64_t>(a_max));
      if (s > e) continue;
      if (s == e || bins.StepFits(b)) {
        ++marks[bins.Of(s, b)];
        --marks[bins.Of(e, b) + 1];
      } else {
        for (std::uint64_t a = s; a <= e; ++a) {
          const std::uint64_t bin = bins.Of(a, b);
          ++marks[bin];
          --marks[bin + 1];
        }
      }
    }
  }

  const Rational min_width = (high - low) / Rational(static_cast<std::int64_t>(resolution));
  std::int64_t depth = 0;
  std::uint64_t i = 0;
  std::vector<std::int64_t> occupancy(bins.Count());
  for (std::uint64_t j = 0; j < bins.Count(); ++j) occupancy[j] = (depth += marks[j]);
  while (i < bins.Count()) {
    if (occupancy[i] > 0) {
      ++i;
      continue;
    }
    std::uint64_t j = i;
    while (j < bins.Count() && occupancy[j] == 0) ++j;
    RatioGap gap;
    const auto left = RatioAtMost(v, bins.Edge(i), low);
    const auto right = RatioAtLeast(v, bins.Edge(j), high);
    gap.left_is_ratio = left.has_value();
    gap.left = left ? Rational(static_cast<std::int64_t>(left->first), static_cast<std::int64_t>(left->second)) : low;
    gap.right_is_ratio = right.has_value();
    gap.right = right ? Rational(static_cast<std::int64_t>(right->first), static_cast<std::int64_t>(right->second)) : high;
    if (gap.right - gap.left >= min_width) report.gaps.push_back(gap);
    i = j;
  }
  return report;
}

GapReport RatioGaps(const IntegerSetSpec& spec, std::uint64_t bound, const Rational& low, const Rational& high,
                    std::uint64_t resolution, GapScanMode mode) {
  const std::vector<std::uint64_t> values = Enumerate(spec, bound);
  return RatioGaps(values, bound, low, high, resolution, mode);
}

// ---------------------------------------------------------------------------
// Accumulation points

namespace {

std::vector<std::vector<std::uint64_t>> Prefixes(const std::vector<std::vector<std::uint64_t>>& sets,
                                                 std::uint64_t bound) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), std::upper_bound(s.begin(), s.end(), bound));
  return out;
}

// Marks the `alive` points of `base` that have a direction of the rung
// within epsilon that is not in `previous`. Only tuples with a coordinate
// above the previous rung's bound can carry such a direction.
std::vector<char> NewNeighbors(std::span<const double> base_images, std::size_t dim,
                               std::span<const std::size_t> alive, double epsilon,
                               const std::vector<std::vector<std::uint64_t>>& rung_sets,
                               std::uint64_t previous_bound, const DirectionSetTruncation& previous, bool distinct,
                               unsigned workers) {
  std::vector<double> alive_images;
  alive_images.reserve(alive.size() * dim);
  for (std::size_t idx : alive)
    alive_images.insert(alive_images.end(), base_images.begin() + static_cast<std::ptrdiff_t>(idx * dim),
                        base_images.begin() + static_cast<std::ptrdiff_t>((idx + 1) * dim));
  const CellGrid grid(alive_images, dim, epsilon);
  workers = ResolveWorkers(workers);

  struct WorkerState {
    std::vector<char> found;
    std::unordered_map<std::uint64_t, std::size_t> open_in_cell;  // unsatisfied points per cell
    std::vector<double> x, y;
    std::vector<std::uint64_t> primitive;
  };
  std::vector<WorkerState> state(workers);
  for (auto& s : state) {
    s.found.assign(alive.size(), 0);
    for (std::size_t i = 0; i < alive.size(); ++i)
      ++s.open_in_cell[grid.Key(std::span<const double>(alive_images).subspan(i * dim, dim))];
    s.x.resize(dim);
    s.primitive.resize(dim);
  }

  ForEachTuple(rung_sets, distinct, workers, [&](unsigned w, std::span<const std::uint64_t> t) {
    bool above = false;
    for (std::uint64_t v : t) above = above || v > previous_bound;
    if (!above) return;
    auto& s = state[w];
    double scale = 0.0;
    for (std::uint64_t v : t) scale = std::max(scale, static_cast<double>(v));
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      s.x[i] = static_cast<double>(t[i]) / scale;
      norm += s.x[i] * s.x[i];
    }
    norm = std::sqrt(norm);
    for (auto& c : s.x) c /= norm;
    bool any_open = false;
    grid.ForEachNeighborCell(s.x, [&](std::uint64_t key) {
      auto it = s.open_in_cell.find(key);
      any_open = it != s.open_in_cell.end() && it->second > 0;
      return any_open;
    });
    if (!any_open) return;
    std::copy(t.begin(), t.end(), s.primitive.begin());
    ReduceToPrimitive(s.primitive);
    bool is_new = false;
    bool checked = false;
    grid.ForEachNeighborCell(s.x, [&](std::uint64_t key) {
      for (std::uint32_t j : grid.Bucket(key)) {
        if (s.found[j]) continue;
        if (Distance(s.x, std::span<const double>(alive_images).subspan(j * dim, dim)) > epsilon) continue;
        if (!checked) {
          is_new = !previous.Contains(s.primitive);
          checked = true;
        }
        if (!is_new) return true;
        s.found[j] = 1;
        --s.open_in_cell[grid.Key(std::span<const double>(alive_images).subspan(j * dim, dim))];
      }
      return false;
    });
  });

  std::vector<char> found(alive.size(), 0);
  for (const auto& s : state)
    for (std::size_t i = 0; i < alive.size(); ++i) found[i] = found[i] || s.found[i];
  return found;
}

}  // namespace

AccumulationApprox EstimateAccumulation(std::span<const IntegerSetSpec> specs, std::span<const std::uint64_t> ladder,
                                        double epsilon, bool distinct, const AccumulationOptions& options) {
  if (ladder.size() < 3) throw ConfigError("accumulation ladder needs at least 3 rungs");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1]) throw ConfigError("accumulation ladder must be strictly increasing");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  const std::size_t k = specs.size();

  std::vector<std::vector<std::uint64_t>> full;
  for (const auto& s : specs) full.push_back(Enumerate(s, ladder.back()));

  AccumulationApprox approx;
  approx.ladder.assign(ladder.begin(), ladder.end());
  approx.epsilon = epsilon;
  approx.distinct = distinct;
  approx.dim = k;
  for (const auto& s : full) approx.top_counts.push_back(s.size());

  auto build = [&](std::uint64_t bound) {
    const auto sets = Prefixes(full, bound);
    for (std::size_t i = 0; i < k; ++i)
      if (sets[i].empty())
        throw ConfigError("set " + std::to_string(i + 1) + " has no elements <= " + std::to_string(bound));
    TruncationOptions topt;
    topt.workers = options.workers;
    auto t = BuildTruncationFromValues(sets, bound, distinct, std::nullopt, topt);
    if (t.empty()) throw ConfigError("empty truncation at rung " + std::to_string(bound));
    return t;
  };

  const DirectionSetTruncation base = build(ladder.front());
  approx.base_size = base.size();
  const std::vector<double> images = base.Images();

  // First rung: another direction of the same truncation within epsilon.
  std::vector<std::size_t> alive;
  {
    const CellGrid grid(images, k, epsilon);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const auto x = std::span<const double>(images).subspan(i * k, k);
      const bool near = grid.ForEachNeighborCell(x, [&](std::uint64_t key) {
        for (std::uint32_t j : grid.Bucket(key))
          if (j != i && Distance(x, std::span<const double>(images).subspan(j * k, k)) <= epsilon) return true;
        return false;
      });
      if (near) alive.push_back(i);
    }
  }

  // Later rungs: a direction first appearing at that rung within epsilon.
  DirectionSetTruncation previous = base;
  for (std::size_t r = 1; r < ladder.size() && !alive.empty(); ++r) {
    const auto sets = Prefixes(full, ladder[r]);
    const std::vector<char> found =
        NewNeighbors(images, k, alive, epsilon, sets, ladder[r - 1], previous, distinct, options.workers);
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (found[i]) next.push_back(alive[i]);
    alive = std::move(next);
    if (r + 1 < ladder.size() && !alive.empty()) previous = build(ladder[r]);
  }
  for (std::size_t i : alive) approx.points.push_back(base.at(i));
  return approx;
}

std::vector<Permutation> AdmissiblePermutations(std::span<const IntegerSetSpec> specs) {
  const std::size_t k = specs.size();
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    bool identity = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = specs[p[i]] == specs[i];
      identity = identity && p[i] == i;
    }
    if (ok && !identity) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ClosureReport ClosureChecks(const AccumulationApprox& approx, std::span<const IntegerSetSpec> specs,
                            std::size_t violation_cap) {
  ClosureReport report;
  report.tolerance = 2.0 * approx.epsilon;
  report.point_count = approx.points.size();
  const std::size_t k = approx.dim;
  if (specs.size() != k) throw ConfigError("closure check: set count does not match the approximation");

  std::vector<double> images;
  std::vector<DirectionPoint> points;
  for (const auto& p : approx.points) {
    points.push_back(p.ToPoint());
    images.insert(images.end(), points.back().coords().begin(), points.back().coords().end());
  }
  if (points.empty()) {
    report.permutation_note = "no approximated accumulation points";
    report.projection_note = report.permutation_note;
    return report;
  }
  const CellGrid grid(images, k, report.tolerance);
  auto matched = [&](std::span<const double> y) {
    return grid.ForEachNeighborCell(y, [&](std::uint64_t key) {
      for (std::uint32_t j : grid.Bucket(key))
        if (Distance(y, std::span<const double>(images).subspan(j * k, k)) <= report.tolerance) return true;
      return false;
    });
  };

  const std::vector<Permutation> perms = AdmissiblePermutations(specs);
  if (perms.empty()) {
    report.permutation_note = "skipped: no two sets are equal, so no permutation applies";
  } else {
    report.permutation_checked = true;
    report.permutations_tested = perms.size();
    for (std::size_t i = 0; i < points.size(); ++i)
      for (const auto& pi : perms) {
        if (matched(Permute(points[i], pi).coords())) continue;
        ++report.permutation_violation_count;
        if (report.permutation_violations.size() < violation_cap)
          report.permutation_violations.push_back({approx.points[i], pi});
      }
  }

  bool big_enough = true;
  for (std::size_t c : approx.top_counts) big_enough = big_enough && c >= k;
  if (!big_enough) {
    report.projection_note = "skipped: some set has fewer than k elements up to the top rung";
  } else {
    report.projection_checked = true;
    const std::vector<IndexSubset> subsets = IndexSubset::AllNonEmpty(k);
    for (std::size_t i = 0; i < points.size(); ++i)
      for (const auto& subset : subsets) {
        if (!subset.Meets(points[i].coords())) continue;
        ++report.projections_tested;
        if (matched(RhoProjection(points[i], subset).coords())) continue;
        ++report.projection_violation_count;
        if (report.projection_violations.size() < violation_cap)
          report.projection_violations.push_back({approx.points[i], subset});
      }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Three-term arithmetic progressions

std::vector<Progression> FindThreeTermAps(std::span<const std::uint64_t> v) {
  std::vector<Progression> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 2; j < v.size(); ++j) {
      if ((v[i] ^ v[j]) & 1) continue;
      const std::uint64_t mid = v[i] + (v[j] - v[i]) / 2;
      const auto first = v.begin() + static_cast<std::ptrdiff_t>(i + 1);
      const auto last = v.begin() + static_cast<std::ptrdiff_t>(j);
      if (std::binary_search(first, last, mid)) out.push_back({v[i], mid, v[j]});
    }
  return out;
}

std::vector<Progression> FindThreeTermAps(const IntegerSetSpec& spec, std::uint64_t bound) {
  if (bound < 3) throw ConfigError("3-AP search needs X >= 3");
  const std::vector<std::uint64_t> values = Enumerate(spec, bound);
  return FindThreeTermAps(values);
}

}  // namespace dirset
