#include "config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <set>

#include "dirset/error.h"

namespace dirset::cli {

namespace pt = boost::property_tree;

namespace {

std::string Trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> Split(const std::string& text, const std::string& separators) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (separators.find(ch) != std::string::npos) {
      out.push_back(Trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(Trim(cur));
  std::erase_if(out, [](const std::string& s) { return s.empty(); });
  return out;
}

std::uint64_t ParseUint(const std::string& field, const std::string& text) {
  std::uint64_t v = 0;
  const std::string t = Trim(text);
  // Accept 1e6-style literals for convenience when they are exact integers.
  if (t.find_first_of("eE") != std::string::npos) {
    std::size_t used = 0;
    double d = 0;
    try {
      d = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == t.size() && d >= 0 && d < 1.8e19 && d == static_cast<double>(static_cast<std::uint64_t>(d)))
      return static_cast<std::uint64_t>(d);
    throw ConfigError("field '" + field + "': expected a non-negative integer, got '" + text + "'");
  }
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("field '" + field + "': expected a non-negative integer, got '" + text + "'");
  return v;
}

double ParseReal(const std::string& field, const std::string& text) {
  const std::string t = Trim(text);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("field '" + field + "': expected a number, got '" + text + "'");
  return v;
}

bool ParseBool(const std::string& field, const std::string& text) {
  const std::string t = Trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError("field '" + field + "': expected true or false, got '" + text + "'");
}

template <typename T>
void Take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

}  // namespace

std::vector<std::uint64_t> ParseUintList(const std::string& field, const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : Split(text, ";,")) out.push_back(ParseUint(field, part));
  if (out.empty()) throw ConfigError("field '" + field + "': empty list");
  return out;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("config file not found: " + path.string());
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.message(), static_cast<std::size_t>(e.line()));
  }

  static const std::set<std::string> known = {
      "experiment.command", "experiment.scenario", "experiment.sets",   "experiment.k",
      "experiment.distinct", "experiment.seed",    "experiment.sampled", "experiment.workers",
      "bounds.bound",       "bounds.ladder",       "bounds.checkpoints", "bounds.search_bound",
      "diagnostics.epsilon", "diagnostics.resolution", "diagnostics.window", "diagnostics.scan",
      "diagnostics.low",    "diagnostics.high",    "diagnostics.kind",   "diagnostics.box",
      "diagnostics.probes", "diagnostics.norm",    "output.dir",         "output.format",
      "output.export",      "budget.tuples"};
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config key '" + section + "' must be inside a section");
    for (const auto& [key, value] : body) {
      const std::string name = section + "." + key;
      if (!known.contains(name)) throw ConfigError("unknown config field '" + name + "'");
    }
  }

  ExperimentConfig c;
  auto get = [&](const std::string& name) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(name, '.'))) return Trim(*v);
    return std::nullopt;
  };
  if (auto v = get("experiment.command")) c.command = *v;
  if (auto v = get("experiment.scenario")) c.scenario = *v;
  if (auto v = get("experiment.sets")) {
    c.sets = Split(*v, ";");
    if (c.sets.empty()) throw ConfigError("field 'experiment.sets': empty list");
  }
  if (auto v = get("experiment.k")) c.k = ParseUint("experiment.k", *v);
  if (auto v = get("experiment.distinct")) c.distinct = ParseBool("experiment.distinct", *v);
  if (auto v = get("experiment.seed")) c.seed = ParseUint("experiment.seed", *v);
  if (auto v = get("experiment.sampled")) c.sampled = ParseUint("experiment.sampled", *v);
  if (auto v = get("experiment.workers"))
    c.workers = static_cast<unsigned>(ParseUint("experiment.workers", *v));
  if (auto v = get("bounds.bound")) c.bound = ParseUint("bounds.bound", *v);
  if (auto v = get("bounds.ladder")) c.ladder = ParseUintList("bounds.ladder", *v);
  if (auto v = get("bounds.checkpoints")) c.checkpoints = ParseUintList("bounds.checkpoints", *v);
  if (auto v = get("bounds.search_bound")) c.search_bound = ParseUint("bounds.search_bound", *v);
  if (auto v = get("diagnostics.epsilon")) c.epsilon = ParseReal("diagnostics.epsilon", *v);
  if (auto v = get("diagnostics.resolution")) c.resolution = ParseUint("diagnostics.resolution", *v);
  if (auto v = get("diagnostics.window")) c.window = ParseUint("diagnostics.window", *v);
  if (auto v = get("diagnostics.scan")) c.scan = *v;
  if (auto v = get("diagnostics.low")) c.low = *v;
  if (auto v = get("diagnostics.high")) c.high = *v;
  if (auto v = get("diagnostics.kind")) c.kind = *v;
  if (auto v = get("diagnostics.box")) c.box = *v;
  if (auto v = get("diagnostics.probes")) c.probes = *v;
  if (auto v = get("diagnostics.norm")) c.norm = *v;
  if (auto v = get("output.dir")) c.out_dir = *v;
  if (auto v = get("output.format")) c.format = *v;
  if (auto v = get("output.export")) c.export_path = *v;
  if (auto v = get("budget.tuples")) c.tuple_budget = ParseUint("budget.tuples", *v);
  return c;
}

ExperimentConfig Merge(ExperimentConfig base, const ExperimentConfig& o) {
  Take(base.command, o.command);
  Take(base.scenario, o.scenario);
  if (!o.sets.empty()) base.sets = o.sets;
  Take(base.k, o.k);
  Take(base.distinct, o.distinct);
  Take(base.seed, o.seed);
  Take(base.sampled, o.sampled);
  Take(base.workers, o.workers);
  Take(base.bound, o.bound);
  if (!o.ladder.empty()) base.ladder = o.ladder;
  if (!o.checkpoints.empty()) base.checkpoints = o.checkpoints;
  Take(base.search_bound, o.search_bound);
  Take(base.epsilon, o.epsilon);
  Take(base.resolution, o.resolution);
  Take(base.window, o.window);
  Take(base.scan, o.scan);
  Take(base.low, o.low);
  Take(base.high, o.high);
  Take(base.kind, o.kind);
  Take(base.box, o.box);
  Take(base.probes, o.probes);
  Take(base.norm, o.norm);
  Take(base.out_dir, o.out_dir);
  Take(base.format, o.format);
  Take(base.export_path, o.export_path);
  Take(base.tuple_budget, o.tuple_budget);
  return base;
}

std::uint64_t RequireBound(const ExperimentConfig& c) {
  if (!c.bound) throw ConfigError("missing required field 'bound' (--bound or bounds.bound)");
  if (*c.bound == 0) throw ConfigError("field 'bound' must be >= 1");
  return *c.bound;
}

double RequireEpsilon(const ExperimentConfig& c) {
  if (!c.epsilon) throw ConfigError("missing required field 'epsilon' (--epsilon or diagnostics.epsilon)");
  if (!(*c.epsilon > 0.0)) throw ConfigError("field 'epsilon' must be positive");
  return *c.epsilon;
}

std::size_t RequireResolution(const ExperimentConfig& c) {
  if (!c.resolution)
    throw ConfigError("missing required field 'resolution' (--resolution or diagnostics.resolution)");
  return *c.resolution;
}

}  // namespace dirset::cli
