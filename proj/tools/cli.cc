#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <new>
#include <sstream>

#include "config.h"
#include "dirset/arith.h"
#include "dirset/diagnostics.h"
#include "dirset/direction.h"
#include "dirset/error.h"
#include "dirset/report.h"
#include "scenarios.h"

namespace dirset::cli {

namespace {

std::string U(std::uint64_t v) { return std::to_string(v); }
std::string D(double v) { return FormatDouble(v); }
std::string B(bool v) { return v ? "true" : "false"; }

enum class Format { kStructured, kCsv };

Format ResolveFormat(const ExperimentConfig& c) {
  const std::string f = c.format.value_or("structured");
  if (f == "structured") return Format::kStructured;
  if (f == "csv") return Format::kCsv;
  throw ConfigError("field 'format': expected structured or csv, got '" + f + "'");
}

// Writes `text` to <out_dir>/<stem>.<ext>, or to `out` when no directory is
// configured.
void Emit(const ExperimentConfig& c, const std::string& stem, const std::string& ext, const std::string& text,
          std::ostream& out) {
  if (!c.out_dir) {
    out << text;
    return;
  }
  const std::filesystem::path dir(*c.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("field 'out': cannot create directory " + dir.string() + ": " + ec.message());
  const std::filesystem::path path = dir / (stem + "." + ext);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("field 'out': cannot write " + path.string());
  file << text;
  out << "wrote " << path.string() << "\n";
}

void EmitReport(const ExperimentConfig& c, const std::string& stem, const std::string& structured,
                const std::string& csv, std::ostream& out) {
  if (ResolveFormat(c) == Format::kCsv)
    Emit(c, stem, "csv", csv, out);
  else
    Emit(c, stem, "txt", structured, out);
}

std::vector<IntegerSetSpec> ParseSets(const ExperimentConfig& c) {
  if (c.sets.empty()) throw ConfigError("missing required field 'sets' (--set or experiment.sets)");
  std::vector<IntegerSetSpec> specs;
  for (const auto& s : c.sets) specs.push_back(ParseSetSpec(s));
  return specs;
}

IntegerSetSpec SingleSet(const ExperimentConfig& c) {
  const auto specs = ParseSets(c);
  if (specs.size() != 1) throw ConfigError("field 'sets': this command takes exactly one set");
  return specs.front();
}

// One set per coordinate; a single set is repeated k times.
std::vector<IntegerSetSpec> TupleSets(const ExperimentConfig& c) {
  std::vector<IntegerSetSpec> specs = ParseSets(c);
  if (c.k) {
    if (specs.size() == 1) specs.assign(*c.k, specs.front());
    else if (specs.size() != *c.k)
      throw ConfigError("field 'k': " + U(*c.k) + " does not match the " + U(specs.size()) + " sets given");
  }
  if (specs.size() < 2) throw ConfigError("field 'k': direction sets need k >= 2 (give --k or several --set)");
  return specs;
}

std::optional<SampledMode> Sampling(const ExperimentConfig& c) {
  if (!c.sampled) return std::nullopt;
  if (!c.seed) throw ConfigError("missing required field 'seed': sampled mode needs an explicit seed");
  return SampledMode{*c.seed, *c.sampled};
}

TruncationOptions TruncOpts(const ExperimentConfig& c) {
  TruncationOptions o;
  if (c.tuple_budget) o.tuple_budget = *c.tuple_budget;
  o.workers = c.workers.value_or(0);
  return o;
}

NormKind Norm(const ExperimentConfig& c) { return ParseNormKind(c.norm.value_or("euclidean")); }

std::vector<DirectionPoint> Probes(const ExperimentConfig& c, std::size_t k) {
  ProbeOptions o;
  o.norm = Norm(c);
  const std::string scheme = c.probes.value_or("grid");
  if (scheme == "random") {
    if (!c.seed) throw ConfigError("missing required field 'seed': random probes need an explicit seed");
    o.scheme = ProbeScheme::kRandom;
    o.seed = *c.seed;
  } else if (scheme != "grid") {
    throw ConfigError("field 'probes': expected grid or random, got '" + scheme + "'");
  }
  return ProbeGrid(k, RequireResolution(c), o);
}

std::string SpecsText(std::span<const IntegerSetSpec> specs) {
  std::string s;
  for (const auto& spec : specs) s += (s.empty() ? "" : " ; ") + FormatSetSpec(spec);
  return s;
}

std::vector<std::string> Columns(const std::string& prefix, std::size_t k) {
  std::vector<std::string> cols;
  for (std::size_t i = 1; i <= k; ++i) cols.push_back(prefix + U(i));
  return cols;
}

// ---------------------------------------------------------------------------

int CmdEnumerate(const ExperimentConfig& c, std::ostream& out) {
  const IntegerSetSpec spec = SingleSet(c);
  const std::uint64_t bound = RequireBound(c);
  const std::vector<std::uint64_t> v = Enumerate(spec, bound);
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("enumerate");
  w.Field("set", FormatSetSpec(spec));
  w.Field("bound", bound);
  w.Field("count", static_cast<std::uint64_t>(v.size()));
  w.List("notes");
  for (const auto& n : EnumerationNotes(spec, bound, v.size())) w.Item(n);
  w.End();
  w.List("elements");
  for (std::uint64_t x : v) w.Item(U(x));
  w.End();
  w.End();
  CsvWriter cw(csv, {"n"});
  for (std::uint64_t x : v) cw.Row({U(x)});
  EmitReport(c, "enumerate", s.str(), csv.str(), out);
  return kExitOk;
}

int CmdDirections(const ExperimentConfig& c, std::ostream& out) {
  const std::vector<IntegerSetSpec> specs = TupleSets(c);
  const std::uint64_t bound = RequireBound(c);
  const bool distinct = c.distinct.value_or(false);
  const DirectionSetTruncation t = BuildTruncation(specs, bound, distinct, Sampling(c), TruncOpts(c));
  const std::size_t k = t.dim();
  if (c.export_path) {
    std::ofstream f(*c.export_path, std::ios::binary);
    if (!f) throw ConfigError("field 'export': cannot write " + *c.export_path);
    WriteTruncation(f, t);
  }
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("directions");
  w.Field("sets", SpecsText(specs));
  w.Field("k", static_cast<std::uint64_t>(k));
  w.Field("bound", bound);
  w.Field("distinct", distinct);
  w.Field("mode", t.exhaustive() ? "exhaustive" : "sampled");
  if (t.sampled()) {
    w.Field("seed", t.sampled()->seed);
    w.Field("samples", t.sampled()->count);
  }
  w.Field("size", static_cast<std::uint64_t>(t.size()));
  w.List("warnings");
  for (const auto& m : t.warnings) w.Item(m);
  w.End();
  w.List("points");
  for (std::size_t i = 0; i < t.size(); ++i) w.Item(JoinSpace(t.row(i)));
  w.End();
  w.End();
  auto cols = Columns("u", k);
  for (auto& col : Columns("x", k)) cols.push_back(col);
  CsvWriter cw(csv, cols);
  const std::vector<double> images = t.Images(Norm(c));
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row;
    for (std::uint64_t u : t.row(i)) row.push_back(U(u));
    for (std::size_t j = 0; j < k; ++j) row.push_back(D(images[i * k + j]));
    cw.Row(row);
  }
  EmitReport(c, "directions", s.str(), csv.str(), out);
  return kExitOk;
}

std::vector<std::uint64_t> DecadeCheckpoints(std::uint64_t bound) {
  std::vector<std::uint64_t> cps;
  for (std::uint64_t x = 10; x < bound; x *= 10) cps.push_back(x);
  cps.push_back(bound);
  return cps;
}

int CmdDensity(const ExperimentConfig& c, std::ostream& out) {
  const IntegerSetSpec spec = SingleSet(c);
  const std::vector<std::uint64_t> cps = !c.checkpoints.empty() ? c.checkpoints : DecadeCheckpoints(RequireBound(c));
  const DensityEstimate e = EstimateDensity(spec, cps);
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("density");
  w.Field("set", FormatSetSpec(spec));
  w.Field("verdict", ToString(e.verdict));
  if (e.verdict == DensityVerdict::kConverging) w.Field("limit", e.limit);
  if (e.verdict == DensityVerdict::kOscillating) {
    w.Field("low", e.low);
    w.Field("high", e.high);
  }
  w.List("checkpoints");
  CsvWriter cw(csv, {"x", "count", "ratio"});
  for (const auto& cp : e.checkpoints) {
    w.Item(U(cp.x) + " " + U(cp.count) + " " + D(cp.ratio));
    cw.Row({U(cp.x), U(cp.count), D(cp.ratio)});
  }
  w.End();
  w.End();
  EmitReport(c, "density", s.str(), csv.str(), out);
  return kExitOk;
}

int CmdRatios(const ExperimentConfig& c, std::ostream& out) {
  const IntegerSetSpec spec = SingleSet(c);
  const std::uint64_t bound = RequireBound(c);
  if (!c.window) throw ConfigError("missing required field 'window' (--window or diagnostics.window)");
  const RatioProfile p = ComputeRatioProfile(spec, bound, *c.window);
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("ratios");
  w.Field("set", FormatSetSpec(spec));
  w.Field("bound", bound);
  w.Field("window", static_cast<std::uint64_t>(p.window));
  w.Field("min", p.min_ratio);
  w.Field("min_pair", U(p.min_numerator) + "/" + U(p.min_denominator));
  w.Field("max", p.max_ratio);
  w.Field("mean", p.mean_ratio);
  w.Field("threshold", p.threshold);
  w.Field("approaches_one", p.approaches_one);
  w.End();
  CsvWriter cw(csv, {"bound", "window", "min", "min_pair", "max", "mean", "threshold", "approaches_one"});
  cw.Row({U(bound), U(p.window), D(p.min_ratio), U(p.min_numerator) + "/" + U(p.min_denominator), D(p.max_ratio),
          D(p.mean_ratio), D(p.threshold), B(p.approaches_one)});
  EmitReport(c, "ratios", s.str(), csv.str(), out);
  return kExitOk;
}

int CmdCover(const ExperimentConfig& c, std::ostream& out) {
  const std::vector<IntegerSetSpec> specs = TupleSets(c);
  const std::uint64_t bound = RequireBound(c);
  const double eps = RequireEpsilon(c);
  const bool distinct = c.distinct.value_or(false);
  const std::vector<DirectionPoint> probes = Probes(c, specs.size());
  const DirectionSetTruncation t = BuildTruncation(specs, bound, distinct, Sampling(c), TruncOpts(c));
  CoverageOptions o;
  o.workers = c.workers.value_or(0);
  const CoverageReport r = Coverage(t, eps, probes, o);
  const std::size_t k = specs.size();
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("cover");
  w.Field("sets", SpecsText(specs));
  w.Field("bound", bound);
  w.Field("distinct", distinct);
  w.Field("mode", t.exhaustive() ? "exhaustive" : "sampled");
  w.Field("points", static_cast<std::uint64_t>(t.size()));
  w.Field("epsilon", eps);
  w.Field("probe_scheme", c.probes.value_or("grid"));
  w.Field("resolution", static_cast<std::uint64_t>(*c.resolution));
  w.Field("probes", static_cast<std::uint64_t>(r.probe_count));
  w.Field("covered", static_cast<std::uint64_t>(r.covered_count));
  w.Field("fraction", r.fraction);
  w.Field("interior_probes", static_cast<std::uint64_t>(r.interior_probe_count));
  w.Field("interior_covered", static_cast<std::uint64_t>(r.interior_covered_count));
  w.Field("interior_fraction", r.interior_fraction);
  w.Field("uncovered_count", static_cast<std::uint64_t>(r.uncovered_count));
  w.List("uncovered");
  for (const auto& u : r.uncovered)
    w.Item(U(u.index) + ": " + JoinSpace(std::span<const double>(u.coords)) + (u.axis_adjacent ? " axis" : ""));
  w.End();
  w.End();
  auto cols = std::vector<std::string>{"probe"};
  for (auto& col : Columns("p", k)) cols.push_back(col);
  cols.push_back("covered");
  cols.push_back("axis_adjacent");
  CsvWriter cw(csv, cols);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    std::vector<std::string> row{U(i)};
    for (double x : probes[i].coords()) row.push_back(D(x));
    row.push_back(B(r.covered[i]));
    row.push_back(B(IsAxisAdjacent(probes[i].coords(), eps)));
    cw.Row(row);
  }
  EmitReport(c, "cover", s.str(), csv.str(), out);
  return kExitOk;
}

int CmdGaps(const ExperimentConfig& c, std::ostream& out) {
  const IntegerSetSpec spec = SingleSet(c);
  const std::uint64_t bound = RequireBound(c);
  if (!c.low || !c.high) throw ConfigError("missing required field 'low'/'high' (--low, --high)");
  const Rational low = Rational::Parse(*c.low), high = Rational::Parse(*c.high);
  const std::size_t resolution = RequireResolution(c);
  const std::string scan = c.scan.value_or("pair");
  GapScanMode mode;
  if (scan == "pair") mode = GapScanMode::kPairScan;
  else if (scan == "sieve") mode = GapScanMode::kIntervalSieve;
  else throw ConfigError("field 'scan': expected pair or sieve, got '" + scan + "'");
  const GapReport g = RatioGaps(spec, bound, low, high, resolution, mode);
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("gaps");
  w.Field("set", FormatSetSpec(spec));
  w.Field("bound", bound);
  w.Field("elements", static_cast<std::uint64_t>(g.element_count));
  w.Field("low", g.low.ToString());
  w.Field("high", g.high.ToString());
  w.Field("resolution", g.resolution);
  w.Field("mode", ToString(g.mode));
  w.List("gaps");
  CsvWriter cw(csv, {"left", "right", "left_is_ratio", "right_is_ratio", "width"});
  for (const auto& gap : g.gaps) {
    const Rational width = gap.right - gap.left;
    w.Item(gap.left.ToString() + " " + gap.right.ToString());
    cw.Row({gap.left.ToString(), gap.right.ToString(), B(gap.left_is_ratio), B(gap.right_is_ratio),
            D(static_cast<double>(width.num()) / static_cast<double>(width.den()))});
  }
  w.End();
  w.End();
  EmitReport(c, "gaps", s.str(), csv.str(), out);
  return kExitOk;
}

struct AccumulationRun {
  std::vector<IntegerSetSpec> specs;
  AccumulationApprox approx;
};

AccumulationRun Accumulate(const ExperimentConfig& c) {
  AccumulationRun run;
  run.specs = TupleSets(c);
  if (c.ladder.empty()) throw ConfigError("missing required field 'ladder' (--ladder or bounds.ladder)");
  AccumulationOptions o;
  o.workers = c.workers.value_or(0);
  run.approx = EstimateAccumulation(run.specs, c.ladder, RequireEpsilon(c), c.distinct.value_or(false), o);
  return run;
}

void WriteApproxHeader(StructuredWriter& w, const AccumulationRun& run) {
  w.Field("sets", SpecsText(run.specs));
  w.Field("ladder", JoinSpace(run.approx.ladder));
  w.Field("epsilon", run.approx.epsilon);
  w.Field("distinct", run.approx.distinct);
  w.Field("base_points", static_cast<std::uint64_t>(run.approx.base_size));
  w.Field("persistent_points", static_cast<std::uint64_t>(run.approx.points.size()));
}

int CmdAccumulate(const ExperimentConfig& c, std::ostream& out) {
  const AccumulationRun run = Accumulate(c);
  const std::size_t k = run.specs.size();
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("accumulate");
  WriteApproxHeader(w, run);
  w.List("points");
  for (const auto& p : run.approx.points) w.Item(p.ToString());
  w.End();
  w.End();
  auto cols = Columns("u", k);
  for (auto& col : Columns("x", k)) cols.push_back(col);
  CsvWriter cw(csv, cols);
  for (const auto& p : run.approx.points) {
    std::vector<std::string> row;
    for (std::uint64_t u : p.coords()) row.push_back(U(u));
    for (double x : p.ToPoint(Norm(c)).coords()) row.push_back(D(x));
    cw.Row(row);
  }
  EmitReport(c, "accumulate", s.str(), csv.str(), out);
  return kExitOk;
}

std::string IndicesText(std::span<const std::size_t> idx, std::size_t offset) {
  std::string s;
  for (std::size_t i : idx) s += (s.empty() ? "" : " ") + U(i + offset);
  return s;
}

int CmdClosure(const ExperimentConfig& c, std::ostream& out) {
  const AccumulationRun run = Accumulate(c);
  const ClosureReport r = ClosureChecks(run.approx, run.specs);
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("closure");
  WriteApproxHeader(w, run);
  w.Field("tolerance", r.tolerance);
  w.Section("permutation");
  w.Field("checked", r.permutation_checked);
  if (!r.permutation_note.empty()) w.Field("note", r.permutation_note);
  w.Field("permutations", static_cast<std::uint64_t>(r.permutations_tested));
  w.Field("violations", static_cast<std::uint64_t>(r.permutation_violation_count));
  w.List("examples");
  CsvWriter cw(csv, {"check", "point", "detail"});
  for (const auto& v : r.permutation_violations) {
    w.Item(v.point.ToString() + " under " + IndicesText(v.permutation.images(), 1));
    cw.Row({"permutation", v.point.ToString(), IndicesText(v.permutation.images(), 1)});
  }
  w.End();
  w.End();
  w.Section("projection");
  w.Field("checked", r.projection_checked);
  if (!r.projection_note.empty()) w.Field("note", r.projection_note);
  w.Field("projections", static_cast<std::uint64_t>(r.projections_tested));
  w.Field("violations", static_cast<std::uint64_t>(r.projection_violation_count));
  w.List("examples");
  for (const auto& v : r.projection_violations) {
    w.Item(v.point.ToString() + " onto {" + IndicesText(v.subset.indices(), 1) + "}");
    cw.Row({"projection", v.point.ToString(), IndicesText(v.subset.indices(), 1)});
  }
  w.End();
  w.End();
  w.End();
  EmitReport(c, "closure", s.str(), csv.str(), out);
  return kExitOk;
}

int CmdAps(const ExperimentConfig& c, std::ostream& out) {
  const IntegerSetSpec spec = SingleSet(c);
  const std::uint64_t bound = RequireBound(c);
  const std::vector<Progression> aps = FindThreeTermAps(spec, bound);
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("aps");
  w.Field("set", FormatSetSpec(spec));
  w.Field("bound", bound);
  w.Field("count", static_cast<std::uint64_t>(aps.size()));
  w.List("progressions");
  CsvWriter cw(csv, {"a", "b", "c"});
  for (const auto& p : aps) {
    w.Item(JoinSpace(p));
    cw.Row({U(p[0]), U(p[1]), U(p[2])});
  }
  w.End();
  w.End();
  EmitReport(c, "aps", s.str(), csv.str(), out);
  return kExitOk;
}

int CmdCountFx(const ExperimentConfig& c, std::ostream& out) {
  if (!c.kind) throw ConfigError("missing required field 'kind' (--kind omega|totient)");
  const SieveKind kind = ParseSieveKind(*c.kind);
  if (kind == SieveKind::kPrimes) throw ConfigError("field 'kind': expected omega or totient");
  const std::uint64_t bound = RequireBound(c);
  SieveOptions so;
  so.workers = c.workers.value_or(0);
  const SieveTable table = Sieve(kind, bound, so);
  const std::vector<CountCheckpoint> cps =
      c.checkpoints.empty() ? RepresentableCount(table, bound) : RepresentableCount(table, c.checkpoints);
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("count-fx");
  w.Field("kind", ToString(kind));
  w.Field("bound", bound);
  w.Field("reference", kind == SieveKind::kTotient ? "count / sqrt(X)" : "count * log(log(X)) / X");
  w.List("checkpoints");
  CsvWriter cw(csv, {"x", "count", "ratio_to_reference"});
  for (const auto& cp : cps) {
    w.Item(U(cp.x) + " " + U(cp.count) + " " + D(cp.ratio_to_reference));
    cw.Row({U(cp.x), U(cp.count), D(cp.ratio_to_reference)});
  }
  w.End();
  w.End();
  EmitReport(c, "count-fx", s.str(), csv.str(), out);
  return kExitOk;
}

// "a1-b1,a2-b2,..." with decimal endpoints.
OpenBox ParseBox(const std::string& text) {
  std::vector<std::pair<double, double>> iv;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-', 1);
    if (dash == std::string::npos) throw ConfigError("field 'box': expected a-b, got '" + part + "'");
    try {
      iv.emplace_back(std::stod(part.substr(0, dash)), std::stod(part.substr(dash + 1)));
    } catch (const std::logic_error&) {
      throw ConfigError("field 'box': expected numbers in '" + part + "'");
    }
  }
  try {
    return OpenBox(iv);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("field 'box': ") + e.what());
  }
}

int CmdWitness(const ExperimentConfig& c, std::ostream& out) {
  const std::vector<IntegerSetSpec> specs = TupleSets(c);
  if (!c.box) throw ConfigError("missing required field 'box' (--box or diagnostics.box)");
  if (!c.search_bound) throw ConfigError("missing required field 'search_bound' (--search-bound)");
  const OpenBox box = ParseBox(*c.box);
  const WitnessResult r = WitnessInBox(specs, box, *c.search_bound, Norm(c));
  std::ostringstream s, csv;
  StructuredWriter w(s);
  w.Section("witness");
  w.Field("sets", SpecsText(specs));
  w.Field("box", *c.box);
  w.Field("search_bound", *c.search_bound);
  w.Field("target", JoinSpace(std::span<const double>(r.target)));
  w.Field("found", r.found());
  if (r.found()) {
    w.Field("tuple", JoinSpace(*r.tuple));
    w.Field("strategy", ToString(*r.strategy));
  }
  w.Field("scales", JoinSpace(r.scales));
  w.End();
  CsvWriter cw(csv, {"found", "tuple", "strategy", "scales"});
  cw.Row({B(r.found()), r.found() ? JoinSpace(*r.tuple) : "", r.found() ? std::string(ToString(*r.strategy)) : "",
          JoinSpace(r.scales)});
  EmitReport(c, "witness", s.str(), csv.str(), out);
  return kExitOk;
}

int CmdReproduce(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.scenario) throw ConfigError("missing required field 'scenario'");
  ScenarioOptions o;
  o.workers = c.workers.value_or(0);
  o.seed = c.seed;
  const ScenarioOutcome r = RunScenario(*c.scenario, o);
  if (c.out_dir) {
    Emit(c, r.name, "txt", r.report, out);
    Emit(c, r.name, "csv", r.csv, out);
  } else {
    out << (ResolveFormat(c) == Format::kCsv ? r.csv : r.report);
  }
  for (const auto& check : r.checks)
    if (!check.passed) err << "check failed: " << check.name << ": " << check.detail << "\n";
  return r.passed() ? kExitOk : kExitScenarioFailed;
}

// Registers the shared flags on a subcommand. Each flag writes into `flags`
// so that config-file values can be overridden afterwards.
void AddCommonFlags(CLI::App* app, ExperimentConfig& flags, std::string& config_path) {
  app->add_option("--config", config_path, "INI experiment config");
  app->add_option_function<std::uint64_t>("--bound", [&](const std::uint64_t& v) { flags.bound = v; },
                                          "Truncation bound X");
  app->add_option_function<double>("--epsilon", [&](const double& v) { flags.epsilon = v; }, "Coverage radius");
  app->add_option_function<std::size_t>("--resolution", [&](const std::size_t& v) { flags.resolution = v; },
                                        "Probe or gap resolution");
  app->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& v) { flags.seed = v; },
                                          "Seed for sampled modes");
  app->add_option_function<unsigned>("--workers", [&](const unsigned& v) { flags.workers = v; },
                                     "Worker threads (0 = all cores)");
  app->add_option_function<std::string>("--out", [&](const std::string& v) { flags.out_dir = v; },
                                        "Output directory");
  app->add_option_function<std::string>("--format", [&](const std::string& v) { flags.format = v; },
                                        "structured or csv")
      ->check(CLI::IsMember({"structured", "csv"}));
}

void AddSetFlags(CLI::App* app, ExperimentConfig& flags) {
  app->add_option("--set", flags.sets, "Set descriptor, repeat once per coordinate");
}

void AddTupleFlags(CLI::App* app, ExperimentConfig& flags) {
  AddSetFlags(app, flags);
  app->add_option_function<std::size_t>("--k", [&](const std::size_t& v) { flags.k = v; },
                                        "Tuple length when a single set is given");
  app->add_flag_function("--distinct", [&](std::int64_t) { flags.distinct = true; },
                         "Require pairwise-distinct coordinates");
  app->add_option_function<std::uint64_t>("--sampled", [&](const std::uint64_t& v) { flags.sampled = v; },
                                          "Draw this many tuples instead of enumerating");
  app->add_option_function<std::uint64_t>("--budget", [&](const std::uint64_t& v) { flags.tuple_budget = v; },
                                          "Exhaustive tuple budget");
  app->add_option_function<std::string>("--norm", [&](const std::string& v) { flags.norm = v; },
                                        "euclidean or l1");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite direction sets of integer sets and their diagnostics", "dirset"};
  app.require_subcommand(1);
  ExperimentConfig flags;
  std::string config_path;
  std::string help_text;

  struct Command {
    std::string name, description;
    std::function<void(CLI::App*)> extra;
    std::function<int(const ExperimentConfig&)> run;
  };
  std::vector<Command> commands = {
      {"enumerate", "List the elements of a set up to the bound", [&](CLI::App* a) { AddSetFlags(a, flags); },
       [&](const ExperimentConfig& c) { return CmdEnumerate(c, out); }},
      {"directions", "Build a direction-set truncation", [&](CLI::App* a) {
         AddTupleFlags(a, flags);
         a->add_option_function<std::string>("--export", [&](const std::string& v) { flags.export_path = v; },
                                             "Also write the sorted text export here");
       },
       [&](const ExperimentConfig& c) { return CmdDirections(c, out); }},
      {"density", "Estimate natural density at checkpoints", [&](CLI::App* a) {
         AddSetFlags(a, flags);
         a->add_option_function<std::string>(
             "--checkpoints", [&](const std::string& v) { flags.checkpoints = ParseUintList("checkpoints", v); },
             "Comma-separated checkpoints");
       },
       [&](const ExperimentConfig& c) { return CmdDensity(c, out); }},
      {"ratios", "Consecutive-ratio profile", [&](CLI::App* a) {
         AddSetFlags(a, flags);
         a->add_option_function<std::size_t>("--window", [&](const std::size_t& v) { flags.window = v; },
                                             "Tail window W");
       },
       [&](const ExperimentConfig& c) { return CmdRatios(c, out); }},
      {"cover", "Epsilon coverage of a probe grid", [&](CLI::App* a) {
         AddTupleFlags(a, flags);
         a->add_option_function<std::string>("--probes", [&](const std::string& v) { flags.probes = v; },
                                             "grid or random");
       },
       [&](const ExperimentConfig& c) { return CmdCover(c, out); }},
      {"gaps", "Exact ratio-gap scan", [&](CLI::App* a) {
         AddSetFlags(a, flags);
         a->add_option_function<std::string>("--low", [&](const std::string& v) { flags.low = v; }, "Scan start");
         a->add_option_function<std::string>("--high", [&](const std::string& v) { flags.high = v; }, "Scan end");
         a->add_option_function<std::string>("--scan", [&](const std::string& v) { flags.scan = v; },
                                             "pair or sieve");
       },
       [&](const ExperimentConfig& c) { return CmdGaps(c, out); }},
      {"accumulate", "Approximate accumulation points over a bound ladder", [&](CLI::App* a) {
         AddTupleFlags(a, flags);
         a->add_option_function<std::string>(
             "--ladder", [&](const std::string& v) { flags.ladder = ParseUintList("ladder", v); },
             "Comma-separated increasing bounds");
       },
       [&](const ExperimentConfig& c) { return CmdAccumulate(c, out); }},
      {"closure", "Permutation and projection closure of accumulation points", [&](CLI::App* a) {
         AddTupleFlags(a, flags);
         a->add_option_function<std::string>(
             "--ladder", [&](const std::string& v) { flags.ladder = ParseUintList("ladder", v); },
             "Comma-separated increasing bounds");
       },
       [&](const ExperimentConfig& c) { return CmdClosure(c, out); }},
      {"aps", "Three-term arithmetic progressions", [&](CLI::App* a) { AddSetFlags(a, flags); },
       [&](const ExperimentConfig& c) { return CmdAps(c, out); }},
      {"count-fx", "Count n <= X of the form k f(k)", [&](CLI::App* a) {
         a->add_option_function<std::string>("--kind", [&](const std::string& v) { flags.kind = v; },
                                             "omega or totient");
         a->add_option_function<std::string>(
             "--checkpoints", [&](const std::string& v) { flags.checkpoints = ParseUintList("checkpoints", v); },
             "Comma-separated checkpoints");
       },
       [&](const ExperimentConfig& c) { return CmdCountFx(c, out); }},
      {"witness", "Find a tuple whose direction lies in a box", [&](CLI::App* a) {
         AddTupleFlags(a, flags);
         a->add_option_function<std::string>("--box", [&](const std::string& v) { flags.box = v; },
                                             "a1-b1,a2-b2,...");
         a->add_option_function<std::uint64_t>("--search-bound",
                                               [&](const std::uint64_t& v) { flags.search_bound = v; },
                                               "Largest element tried");
       },
       [&](const ExperimentConfig& c) { return CmdWitness(c, out); }},
      {"reproduce", "Run an acceptance scenario", [&](CLI::App* a) {
         a->add_option_function<std::string>("scenario", [&](const std::string& v) { flags.scenario = v; },
                                             "Scenario name");
       },
       [&](const ExperimentConfig& c) { return CmdReproduce(c, out, err); }},
  };
  for (auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
    AddCommonFlags(sub, flags, config_path);
    cmd.extra(sub);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rev);
    const Command* chosen = nullptr;
    for (const auto& cmd : commands)
      if (app.got_subcommand(cmd.name)) chosen = &cmd;
    ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : LoadConfig(config_path);
    if (cfg.command && *cfg.command != chosen->name)
      throw ConfigError("field 'experiment.command': config is for '" + *cfg.command + "', not '" + chosen->name +
                        "'");
    cfg = Merge(std::move(cfg), flags);
    return chosen->run(cfg);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, err, err);
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "resource error: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace dirset::cli
