#include "scenarios.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "dirset/arith.h"
#include "dirset/diagnostics.h"
#include "dirset/direction.h"
#include "dirset/error.h"
#include "dirset/report.h"

namespace dirset::cli {

bool ScenarioOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScenarioCheck& c) { return c.passed; });
}

namespace {

std::string U(std::uint64_t v) { return std::to_string(v); }
std::string D(double v) { return FormatDouble(v); }

// Collects checks plus the structured and CSV bodies of one scenario.
class Recorder {
 public:
  explicit Recorder(std::string name) : writer_(report_) {
    outcome_.name = std::move(name);
    writer_.Section("scenario");
    writer_.Field("name", outcome_.name);
  }

  StructuredWriter& writer() { return writer_; }
  std::ostringstream& csv() { return csv_; }

  void Check(std::string name, bool passed, std::string detail) {
    outcome_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

  ScenarioOutcome Finish() {
    writer_.List("checks");
    for (const auto& c : outcome_.checks)
      writer_.Item(std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail);
    writer_.End();
    writer_.Field("verdict", outcome_.passed() ? "pass" : "fail");
    writer_.End();
    outcome_.report = report_.str();
    outcome_.csv = csv_.str();
    return std::move(outcome_);
  }

 private:
  std::ostringstream report_;
  std::ostringstream csv_;
  StructuredWriter writer_;
  ScenarioOutcome outcome_;
};

std::vector<IntegerSetSpec> Repeat(const std::string& text, std::size_t k) {
  return std::vector<IntegerSetSpec>(k, ParseSetSpec(text));
}

std::string SpecList(std::span<const IntegerSetSpec> specs) {
  std::string s;
  for (const auto& spec : specs) s += (s.empty() ? "" : " ; ") + FormatSetSpec(spec);
  return s;
}

double Product(std::span<const IntegerSetSpec> specs, std::uint64_t bound) {
  double p = 1.0;
  for (const auto& s : specs) p *= static_cast<double>(Enumerate(s, bound).size());
  return p;
}

// Random configuration for the engine/oracle comparisons. The generator is
// mt19937_64 with modular reduction, which is identical on every platform.
struct RandomConfig {
  std::vector<IntegerSetSpec> specs;
  std::uint64_t bound = 0;
  bool distinct = false;
};

IntegerSetSpec RandomSpec(std::mt19937_64& rng) {
  static const std::vector<std::string> pool = {
      "naturals",        "primes",        "primes-ap:m=4:a=1", "primes-ap:m=4:a=3",
      "blocks:q=5:1-2",  "blocks:q=3:1-2", "blocks:q=5:2-3,3-5", "poly:L=20:x1^2",
      "poly:L=12:x1^2+x2^2", "poly:L=15:x1*x2-5:diag", "perfect-powers", "n-omega",
      "n-phi",           "two-three-powers"};
  const std::uint64_t pick = rng() % (pool.size() + 1);
  if (pick < pool.size()) return ParseSetSpec(pool[pick]);
  Explicit e;
  for (std::uint64_t v = 1; v <= 300; ++v)
    if (rng() % 12 == 0) e.values.push_back(v);
  if (e.values.empty()) e.values.push_back(1 + rng() % 300);
  return e;
}

RandomConfig MakeRandomConfig(std::mt19937_64& rng, std::size_t k, bool identical) {
  for (;;) {
    RandomConfig c;
    c.distinct = rng() % 2 == 1;
    c.bound = 10 + rng() % 291;
    const IntegerSetSpec first = RandomSpec(rng);
    for (std::size_t i = 0; i < k; ++i) c.specs.push_back(identical || i == 0 ? first : RandomSpec(rng));
    while (c.bound > 10 && Product(c.specs, c.bound) > static_cast<double>(kOracleTupleBudget))
      c.bound = c.bound * 3 / 4;
    bool ok = Product(c.specs, c.bound) <= static_cast<double>(kOracleTupleBudget);
    for (const auto& s : c.specs) ok = ok && !Enumerate(s, c.bound).empty();
    if (ok) return c;
  }
}

// ---------------------------------------------------------------------------

ScenarioOutcome OracleEquivalence(const ScenarioOptions& opt) {
  Recorder rec("oracle-equivalence");
  const std::uint64_t seed = opt.seed.value_or(kScenarioSeed);
  const std::size_t configs = 60;
  rec.writer().Field("seed", seed);
  rec.writer().Field("configs", static_cast<std::uint64_t>(configs));
  std::mt19937_64 rng(seed);
  CsvWriter csv(rec.csv(), {"config", "k", "distinct", "bound", "sets", "engine_size", "oracle_size", "equal"});
  std::size_t mismatches = 0;
  std::size_t per_k[5] = {};
  std::size_t per_distinct[2] = {};
  TruncationOptions topt;
  topt.workers = opt.workers;
  for (std::size_t i = 0; i < configs; ++i) {
    const std::size_t k = 2 + i % 3;
    const RandomConfig c = MakeRandomConfig(rng, k, false);
    const DirectionSetTruncation t = BuildTruncation(c.specs, c.bound, c.distinct, std::nullopt, topt);
    const std::vector<PrimitiveDirection> oracle = OracleTruncation(c.specs, c.bound, c.distinct);
    const std::vector<PrimitiveDirection> engine = t.Points();
    const bool equal = engine == oracle;
    if (!equal) ++mismatches;
    ++per_k[k];
    ++per_distinct[c.distinct ? 1 : 0];
    csv.Row({U(i), U(k), c.distinct ? "true" : "false", U(c.bound), SpecList(c.specs), U(engine.size()),
             U(oracle.size()), equal ? "true" : "false"});
  }
  rec.writer().Field("mismatches", static_cast<std::uint64_t>(mismatches));
  rec.Check("config mix", per_k[2] > 0 && per_k[3] > 0 && per_k[4] > 0 && per_distinct[0] > 0 && per_distinct[1] > 0,
            "k=2: " + U(per_k[2]) + ", k=3: " + U(per_k[3]) + ", k=4: " + U(per_k[4]) +
                ", distinct: " + U(per_distinct[1]) + " of " + U(configs));
  rec.Check("engine equals oracle", mismatches == 0, U(configs - mismatches) + " of " + U(configs) + " configs equal");
  return rec.Finish();
}

// Distance of each checkpoint ratio to `target`.
std::vector<double> Distances(const std::vector<CountCheckpoint>& cps, double target) {
  std::vector<double> d;
  for (const auto& c : cps) d.push_back(std::abs(c.ratio_to_reference - target));
  return d;
}

ScenarioOutcome PhiConstant(const ScenarioOptions&) {
  Recorder rec("phi-constant");
  const std::vector<std::uint64_t> xs = {10'000, 100'000, 1'000'000};
  const SieveTable table = Sieve(SieveKind::kTotient, xs.back());
  const std::vector<CountCheckpoint> cps = RepresentableCount(table, xs);
  const std::vector<double> dist = Distances(cps, kTotientRepresentableConstant);
  rec.writer().Field("reference", kTotientRepresentableConstant);
  CsvWriter csv(rec.csv(), {"x", "count", "ratio", "distance"});
  rec.writer().List("checkpoints");
  for (std::size_t i = 0; i < cps.size(); ++i) {
    rec.writer().Item(U(cps[i].x) + " " + U(cps[i].count) + " " + D(cps[i].ratio_to_reference));
    csv.Row({U(cps[i].x), U(cps[i].count), D(cps[i].ratio_to_reference), D(dist[i])});
  }
  rec.writer().End();
  const double last = cps.back().ratio_to_reference;
  rec.Check("final ratio in [1.30, 1.43]", last >= 1.30 && last <= 1.43, "f_X/sqrt(X) = " + D(last));
  bool non_increasing = true;
  std::string trail;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (i > 0 && dist[i] > dist[i - 1]) non_increasing = false;
    trail += (i ? " " : "") + D(dist[i]);
  }
  rec.Check("distance to reference non-increasing", non_increasing, "distances " + trail);
  return rec.Finish();
}

ScenarioOutcome OmegaTrend(const ScenarioOptions&) {
  Recorder rec("omega-trend");
  // Five checkpoints evenly spaced in log X, giving four steps.
  std::vector<std::uint64_t> xs;
  for (int i = 0; i <= 4; ++i) xs.push_back(static_cast<std::uint64_t>(std::llround(std::pow(10.0, 4.0 + 0.75 * i))));
  const SieveTable table = Sieve(SieveKind::kOmega, xs.back());
  const std::vector<CountCheckpoint> cps = RepresentableCount(table, xs);
  CsvWriter csv(rec.csv(), {"x", "count", "ratio", "distance"});
  rec.writer().List("checkpoints");
  bool in_band = true;
  std::size_t toward = 0;
  std::string ratios;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const double r = cps[i].ratio_to_reference;
    rec.writer().Item(U(cps[i].x) + " " + U(cps[i].count) + " " + D(r));
    csv.Row({U(cps[i].x), U(cps[i].count), D(r), D(std::abs(r - 1.0))});
    in_band = in_band && r >= 0.5 && r <= 1.5;
    if (i > 0 && std::abs(r - 1.0) <= std::abs(cps[i - 1].ratio_to_reference - 1.0)) ++toward;
    ratios += (i ? " " : "") + D(r);
  }
  rec.writer().End();
  rec.Check("ratios within [0.5, 1.5]", in_band, ratios);
  rec.Check("moves toward 1 in >= 3 of 4 steps", toward >= 3, U(toward) + " of 4 steps");
  return rec.Finish();
}

// An empty window containing the closed interval [lo, hi].
bool HasWindow(const GapReport& r, const Rational& lo, const Rational& hi, std::string& found) {
  for (const auto& g : r.gaps)
    if (g.left < lo && hi < g.right) {
      found = "(" + g.left.ToString() + ", " + g.right.ToString() + ")";
      return true;
    }
  found = "none";
  return false;
}

ScenarioOutcome PartitionGap(const ScenarioOptions& opt) {
  Recorder rec("partition-gap");
  const std::uint64_t seed = opt.seed.value_or(kScenarioSeed);
  const std::uint64_t bound = 100'000;
  struct Part {
    std::string label, spec;
    Rational lo, hi;
  };
  // Windows confirmed by a brute-force pair scan and frozen here.
  const std::vector<Part> parts = {
      {"A", "blocks:q=5:1-2", Rational(2), Rational(5, 2)},
      {"B", "blocks:q=5:2-3", Rational(3, 2), Rational(10, 3)},
      {"C", "blocks:q=5:3-5", Rational(5, 3), Rational(3)},
  };
  // Gap rows: left, right, left_is_ratio, right_is_ratio. Arc rows: bound,
  // mode, points, covered arc probes.
  CsvWriter csv(rec.csv(), {"part", "kind", "c1", "c2", "c3", "c4"});
  rec.writer().Field("bound", bound);
  for (const auto& p : parts) {
    const GapReport g =
        RatioGaps(ParseSetSpec(p.spec), bound, Rational(1), Rational(4), 100, GapScanMode::kIntervalSieve);
    rec.writer().Section(p.label);
    rec.writer().Field("set", p.spec);
    rec.writer().Field("elements", static_cast<std::uint64_t>(g.element_count));
    rec.writer().List("gaps");
    for (const auto& gap : g.gaps) {
      rec.writer().Item(gap.left.ToString() + " " + gap.right.ToString());
      csv.Row({p.label, "gap", gap.left.ToString(), gap.right.ToString(), gap.left_is_ratio ? "true" : "false",
               gap.right_is_ratio ? "true" : "false"});
    }
    rec.writer().End();
    rec.writer().End();
    std::string found;
    const bool ok = HasWindow(g, p.lo, p.hi, found);
    rec.Check(p.label + " empty window contains [" + p.lo.ToString() + ", " + p.hi.ToString() + "]", ok,
              "window " + found);
  }

  // Probes whose coordinate ratio lies in [2.05, 2.45] (either orientation)
  // must stay uncovered at epsilon = 0.005.
  const double eps = 0.005;
  const std::vector<DirectionPoint> probes = ProbeGrid(2, 2000);
  std::vector<std::size_t> arc;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const double x = probes[i][0], y = probes[i][1];
    const auto in = [](double r) { return r >= 2.05 && r <= 2.45; };
    if ((y > 0 && in(x / y)) || (x > 0 && in(y / x))) arc.push_back(i);
  }
  rec.writer().Field("arc_probes", static_cast<std::uint64_t>(arc.size()));
  const std::vector<IntegerSetSpec> a2 = Repeat("blocks:q=5:1-2", 2);
  TruncationOptions topt;
  topt.workers = opt.workers;
  CoverageOptions copt;
  copt.workers = opt.workers;
  struct Run {
    std::uint64_t bound;
    std::optional<SampledMode> sampled;
  };
  const std::vector<Run> runs = {{1'000, {}}, {10'000, {}}, {100'000, SampledMode{seed, 10'000'000}}};
  rec.writer().List("arc_coverage");
  for (const auto& run : runs) {
    const DirectionSetTruncation t = BuildTruncation(a2, run.bound, false, run.sampled, topt);
    const CoverageReport cov = Coverage(t, eps, probes, copt);
    std::size_t hit = 0;
    for (std::size_t i : arc) hit += cov.covered[i] ? 1 : 0;
    const std::string mode = run.sampled ? "sampled" : "exhaustive";
    rec.writer().Item(U(run.bound) + " " + mode + " " + U(t.size()) + " " + U(hit));
    csv.Row({"A", "arc", U(run.bound), mode, U(t.size()), U(hit)});
    rec.Check("arc uncovered at bound " + U(run.bound) + " (" + mode + ")", !arc.empty() && hit == 0,
              U(hit) + " of " + U(arc.size()) + " arc probes covered");
  }
  rec.writer().End();
  return rec.Finish();
}

ScenarioOutcome TwoPartitionRatios(const ScenarioOptions&) {
  Recorder rec("two-partition-ratios");
  const std::uint64_t top = 1'000'000;
  const std::vector<std::uint64_t> a = Enumerate(ParseSetSpec("blocks:q=3:1-2"), top);
  CsvWriter csv(rec.csv(), {"boundary", "window", "min_numerator", "min_denominator", "min_ratio", "at_most_2_3"});
  std::size_t tested = 0, failed = 0;
  rec.writer().List("boundaries");
  for (std::uint64_t b = 3; b <= top; b *= 3) {
    const auto count = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), b) - a.begin());
    const std::size_t window = std::min<std::size_t>(10, count - 1);
    const RatioProfile p = ComputeRatioProfile(a, b, window);
    const bool ok = 3 * p.min_numerator <= 2 * p.min_denominator;
    ++tested;
    failed += ok ? 0 : 1;
    rec.writer().Item(U(b) + " " + U(window) + " " + U(p.min_numerator) + "/" + U(p.min_denominator));
    csv.Row({U(b), U(window), U(p.min_numerator), U(p.min_denominator), D(p.min_ratio), ok ? "true" : "false"});
  }
  rec.writer().End();
  rec.Check("every boundary window has a ratio <= 2/3", tested > 0 && failed == 0,
            U(tested - failed) + " of " + U(tested) + " boundaries");
  return rec.Finish();
}

// Hash-based reference: for each pair (a, b) with a < b, look up 2b - a.
std::size_t OracleApCount(const std::vector<std::uint64_t>& v) {
  const std::unordered_set<std::uint64_t> members(v.begin(), v.end());
  std::size_t n = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (members.contains(2 * v[j] - v[i])) ++n;
  return n;
}

ScenarioOutcome ApFree(const ScenarioOptions& opt) {
  Recorder rec("ap-free");
  CsvWriter csv(rec.csv(), {"set", "bound", "elements", "progressions", "oracle_progressions"});
  struct Case {
    std::string spec;
    std::uint64_t bound;
  };
  for (const Case& c : {Case{"perfect-powers", 1'000'000}, Case{"two-three-powers", 10'000}}) {
    const std::vector<std::uint64_t> v = Enumerate(ParseSetSpec(c.spec), c.bound);
    const std::vector<Progression> aps = FindThreeTermAps(v);
    const std::size_t oracle = OracleApCount(v);
    csv.Row({c.spec, U(c.bound), U(v.size()), U(aps.size()), U(oracle)});
    rec.writer().Section(c.spec);
    rec.writer().Field("bound", c.bound);
    rec.writer().Field("elements", static_cast<std::uint64_t>(v.size()));
    rec.writer().Field("progressions", static_cast<std::uint64_t>(aps.size()));
    rec.writer().End();
    rec.Check(c.spec + " has no 3-AP up to " + U(c.bound), aps.empty(), U(aps.size()) + " found");
    rec.Check(c.spec + " oracle agrees", oracle == aps.size(), "oracle found " + U(oracle));
  }
  TruncationOptions topt;
  topt.workers = opt.workers;
  CoverageOptions copt;
  copt.workers = opt.workers;
  const DirectionSetTruncation t = BuildTruncation(Repeat("perfect-powers", 2), 1'000'000, false, std::nullopt, topt);
  const CoverageReport cov = Coverage(t, 0.05, ProbeGrid(2, 500), copt);
  rec.writer().Section("coverage");
  rec.writer().Field("epsilon", 0.05);
  rec.writer().Field("resolution", 500);
  rec.writer().Field("points", static_cast<std::uint64_t>(t.size()));
  rec.writer().Field("fraction", cov.fraction);
  rec.writer().Field("interior_fraction", cov.interior_fraction);
  rec.writer().End();
  rec.Check("perfect-powers coverage away from the axes >= 0.9", cov.interior_fraction >= 0.9,
            "interior fraction " + D(cov.interior_fraction));
  return rec.Finish();
}

ScenarioOutcome Denseness(const ScenarioOptions& opt) {
  Recorder rec("denseness");
  const std::uint64_t seed = opt.seed.value_or(kScenarioSeed);
  const std::uint64_t samples = 10'000'000;
  struct Family {
    std::string label;
    std::vector<std::string> specs;  // cycled up to k
  };
  const std::vector<Family> families = {
      {"primes", {"primes"}},
      {"squares", {"poly:L=317:x1^2"}},
      {"primes 1 mod 4 x primes 3 mod 4", {"primes-ap:m=4:a=1", "primes-ap:m=4:a=3"}},
      {"sums of two squares", {"poly:L=317:x1^2+x2^2:diag"}},
      {"n omega(n)", {"n-omega"}},
      {"n phi(n)", {"n-phi"}},
  };
  TruncationOptions topt;
  topt.workers = opt.workers;
  CoverageOptions copt;
  copt.workers = opt.workers;
  CsvWriter csv(rec.csv(), {"family", "k", "bound", "mode", "points", "epsilon", "probes", "fraction",
                            "interior_probes", "interior_fraction"});
  struct Setting {
    std::size_t k;
    std::uint64_t bound;
    double eps;
    std::size_t resolution;
    bool always_sample;
    double threshold;
  };
  for (const Setting& s : {Setting{2, 100'000, 0.02, 500, false, 0.99}, Setting{3, 1'000, 0.05, 50, true, 0.95}}) {
    const std::vector<DirectionPoint> probes = ProbeGrid(s.k, s.resolution);
    rec.writer().Section("k" + U(s.k));
    rec.writer().Field("bound", s.bound);
    rec.writer().Field("epsilon", s.eps);
    rec.writer().Field("resolution", static_cast<std::uint64_t>(s.resolution));
    rec.writer().Field("probes", static_cast<std::uint64_t>(probes.size()));
    rec.writer().List("families");
    for (const auto& f : families) {
      std::vector<IntegerSetSpec> specs;
      for (std::size_t i = 0; i < s.k; ++i) specs.push_back(ParseSetSpec(f.specs[i % f.specs.size()]));
      std::optional<SampledMode> sampled;
      if (s.always_sample || Product(specs, s.bound) > static_cast<double>(samples))
        sampled = SampledMode{seed, samples};
      const DirectionSetTruncation t = BuildTruncation(specs, s.bound, false, sampled, topt);
      const CoverageReport cov = Coverage(t, s.eps, probes, copt);
      const std::string mode = sampled ? "sampled" : "exhaustive";
      rec.writer().Item(f.label + ": " + mode + " " + U(t.size()) + " points, fraction " + D(cov.fraction) +
                        ", interior " + D(cov.interior_fraction));
      csv.Row({f.label, U(s.k), U(s.bound), mode, U(t.size()), D(s.eps), U(cov.probe_count), D(cov.fraction),
               U(cov.interior_probe_count), D(cov.interior_fraction)});
      rec.Check(f.label + " k=" + U(s.k) + " interior coverage >= " + D(s.threshold),
                cov.interior_fraction >= s.threshold, D(cov.interior_fraction));
    }
    rec.writer().End();
    rec.writer().End();
  }
  return rec.Finish();
}

ScenarioOutcome Closure(const ScenarioOptions& opt) {
  Recorder rec("closure");
  const std::uint64_t seed = opt.seed.value_or(kScenarioSeed);
  rec.writer().Field("seed", seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  TruncationOptions topt;
  topt.workers = opt.workers;
  CsvWriter csv(rec.csv(), {"part", "item", "detail", "value"});

  // Identical specs: the truncation itself is closed under permutations.
  const std::size_t configs = 20;
  std::size_t closed = 0;
  for (std::size_t i = 0; i < configs; ++i) {
    const std::size_t k = 2 + i % 3;
    const RandomConfig c = MakeRandomConfig(rng, k, true);
    const DirectionSetTruncation t = BuildTruncation(c.specs, c.bound, c.distinct, std::nullopt, topt);
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    bool ok = true;
    std::vector<std::uint64_t> y(k);
    do {
      for (std::size_t r = 0; r < t.size() && ok; ++r) {
        const auto row = t.row(r);
        for (std::size_t j = 0; j < k; ++j) y[j] = row[p[j]];
        ok = t.Contains(y);
      }
    } while (ok && std::next_permutation(p.begin(), p.end()));
    closed += ok ? 1 : 0;
    csv.Row({"permutation", U(i), SpecList(c.specs) + " bound " + U(c.bound) + (c.distinct ? " distinct" : ""),
             ok ? "closed" : "not-closed"});
  }
  rec.writer().Field("permutation_configs", static_cast<std::uint64_t>(configs));
  rec.Check("truncations with identical specs are permutation-closed", closed == configs,
            U(closed) + " of " + U(configs));

  const std::vector<std::uint64_t> ladder = {1'000, 3'000, 10'000};
  const double eps = 0.01;
  AccumulationOptions aopt;
  aopt.workers = opt.workers;
  for (const std::string spec : {"naturals", "primes"}) {
    const std::vector<IntegerSetSpec> specs = Repeat(spec, 2);
    const AccumulationApprox approx = EstimateAccumulation(specs, ladder, eps, true, aopt);
    const ClosureReport cr = ClosureChecks(approx, specs);
    rec.writer().Section(spec);
    rec.writer().Field("ladder", JoinSpace(ladder));
    rec.writer().Field("epsilon", eps);
    rec.writer().Field("base_points", static_cast<std::uint64_t>(approx.base_size));
    rec.writer().Field("persistent_points", static_cast<std::uint64_t>(approx.points.size()));
    rec.writer().Field("permutations_tested", static_cast<std::uint64_t>(cr.permutations_tested));
    rec.writer().Field("permutation_violations", static_cast<std::uint64_t>(cr.permutation_violation_count));
    rec.writer().Field("projections_tested", static_cast<std::uint64_t>(cr.projections_tested));
    rec.writer().Field("projection_violations", static_cast<std::uint64_t>(cr.projection_violation_count));
    rec.writer().End();
    csv.Row({"accumulation", spec, "persistent_points", U(approx.points.size())});
    csv.Row({"accumulation", spec, "permutation_violations", U(cr.permutation_violation_count)});
    csv.Row({"accumulation", spec, "projection_violations", U(cr.projection_violation_count)});
    rec.Check(spec + " approximation non-empty", !approx.points.empty(), U(approx.points.size()) + " points");
    rec.Check(spec + " permutation closure", cr.permutation_checked && cr.permutation_violation_count == 0,
              U(cr.permutation_violation_count) + " violations in " + U(cr.permutations_tested * cr.point_count) +
                  " checks");
    rec.Check(spec + " projection closure", cr.projection_checked && cr.projection_violation_count == 0,
              U(cr.projection_violation_count) + " violations in " + U(cr.projections_tested) + " checks");
  }
  return rec.Finish();
}

ScenarioOutcome Determinism(const ScenarioOptions& opt) {
  Recorder rec("determinism");
  CsvWriter csv(rec.csv(), {"scenario", "identical"});
  for (const auto& name : ScenarioNames()) {
    if (name == "determinism") continue;
    ScenarioOptions one = opt, four = opt;
    one.workers = 1;
    four.workers = 4;
    const ScenarioOutcome a = RunScenario(name, one);
    const ScenarioOutcome b = RunScenario(name, four);
    const bool same = a.report == b.report && a.csv == b.csv;
    csv.Row({name, same ? "true" : "false"});
    rec.Check(name + " identical with 1 and 4 workers", same, same ? "byte-identical" : "reports differ");
  }
  return rec.Finish();
}

}  // namespace

const std::vector<std::string>& ScenarioNames() {
  static const std::vector<std::string> names = {
      "oracle-equivalence", "phi-constant", "omega-trend", "partition-gap", "two-partition-ratios",
      "ap-free",            "denseness",    "closure",     "determinism"};
  return names;
}

ScenarioOutcome RunScenario(std::string_view name, const ScenarioOptions& options) {
  if (name == "oracle-equivalence") return OracleEquivalence(options);
  if (name == "phi-constant") return PhiConstant(options);
  if (name == "omega-trend") return OmegaTrend(options);
  if (name == "partition-gap") return PartitionGap(options);
  if (name == "two-partition-ratios") return TwoPartitionRatios(options);
  if (name == "ap-free") return ApFree(options);
  if (name == "denseness") return Denseness(options);
  if (name == "closure") return Closure(options);
  if (name == "determinism") return Determinism(options);
  std::string known;
  for (const auto& n : ScenarioNames()) known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("unknown scenario '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace dirset::cli
