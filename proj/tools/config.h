#ifndef DIRSET_TOOLS_CONFIG_H_
#define DIRSET_TOOLS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dirset::cli {

// Everything a run can be configured with. Unset fields have no value; there
// are no silent defaults for bounds, epsilon or resolution, so a command that
// needs one of them fails with a config error naming the field.
struct ExperimentConfig {
  std::optional<std::string> command;
  std::optional<std::string> scenario;
  std::vector<std::string> sets;
  std::optional<std::size_t> k;
  std::optional<bool> distinct;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> sampled;  // tuple count for sampled mode
  std::optional<unsigned> workers;

  std::optional<std::uint64_t> bound;
  std::vector<std::uint64_t> ladder;
  std::vector<std::uint64_t> checkpoints;
  std::optional<std::uint64_t> search_bound;

  std::optional<double> epsilon;
  std::optional<std::size_t> resolution;
  std::optional<std::size_t> window;
  std::optional<std::string> scan;   // pair | sieve
  std::optional<std::string> low, high;
  std::optional<std::string> kind;   // omega | totient
  std::optional<std::string> box;
  std::optional<std::string> probes; // grid | random
  std::optional<std::string> norm;   // euclidean | l1

  std::optional<std::string> out_dir;
  std::optional<std::string> format; // structured | csv
  std::optional<std::string> export_path;
  std::optional<std::uint64_t> tuple_budget;
};

// Reads an INI file with the sections [experiment], [bounds], [diagnostics],
// [output] and [budget]. Lists (sets, ladder, checkpoints) are separated by
// ';' or ','; sets only by ';' because set descriptors contain commas.
// Unknown sections or keys and unparsable values raise ConfigError naming the
// offending field.
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Fields of `override` replace those of `base` when present.
ExperimentConfig Merge(ExperimentConfig base, const ExperimentConfig& override);

// Field accessors that raise ConfigError("missing required field ...").
std::uint64_t RequireBound(const ExperimentConfig& c);
double RequireEpsilon(const ExperimentConfig& c);
std::size_t RequireResolution(const ExperimentConfig& c);

std::vector<std::uint64_t> ParseUintList(const std::string& field, const std::string& text);

}  // namespace dirset::cli

#endif  // DIRSET_TOOLS_CONFIG_H_
