#ifndef DIRSET_TOOLS_CLI_H_
#define DIRSET_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dirset::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitScenarioFailed = 3;

// Runs one command line (args[0] is the program name). Reports go to `out`
// unless an output directory is configured; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirset::cli

#endif  // DIRSET_TOOLS_CLI_H_
