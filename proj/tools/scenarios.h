#ifndef DIRSET_TOOLS_SCENARIOS_H_
#define DIRSET_TOOLS_SCENARIOS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dirset::cli {

// Seed used by the sampled steps of every scenario unless overridden.
inline constexpr std::uint64_t kScenarioSeed = 20240601;

struct ScenarioOptions {
  unsigned workers = 0;
  std::optional<std::uint64_t> seed;
};

struct ScenarioCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ScenarioOutcome {
  std::string name;
  std::vector<ScenarioCheck> checks;
  std::string report;  // structured text
  std::string csv;
  bool passed() const;
};

// Scenario names in acceptance order; each one checks one criterion.
const std::vector<std::string>& ScenarioNames();

// Throws ConfigError for an unknown name.
ScenarioOutcome RunScenario(std::string_view name, const ScenarioOptions& options);

}  // namespace dirset::cli

#endif  // DIRSET_TOOLS_SCENARIOS_H_
