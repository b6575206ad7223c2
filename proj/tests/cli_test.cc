#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "config.h"
#include "dirset/error.h"

namespace dirset::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out, err;
};

Result Call(std::vector<std::string> args) {
  args.insert(args.begin(), "dirset");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("dirset_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path Write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }

 private:
  fs::path path_;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, EnumerateWritesReport) {
  const auto r = Call({"enumerate", "--set", "primes", "--bound", "30"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("29"), std::string::npos);
  const auto csv = Call({"enumerate", "--set", "primes", "--bound", "30", "--format", "csv"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_NE(csv.out, r.out);
}

TEST(Cli, ConfigErrorsExitOne) {
  const auto missing = Call({"enumerate", "--set", "primes"});
  EXPECT_EQ(missing.code, kExitConfig);
  EXPECT_NE(missing.err.find("bound"), std::string::npos);

  EXPECT_EQ(Call({"enumerate", "--set", "primes", "--bound", "30", "--nonsense"}).code, kExitConfig);
  EXPECT_EQ(Call({"enumerate", "--set", "blocks:q=1:1-2", "--bound", "30"}).code, kExitConfig);
  EXPECT_EQ(Call({"cover", "--set", "primes", "--k", "2", "--bound", "100", "--resolution", "10"}).code,
            kExitConfig);  // no epsilon
  EXPECT_EQ(Call({"directions", "--set", "primes", "--k", "2", "--bound", "100", "--sampled", "50"}).code,
            kExitConfig);  // sampled without a seed
  EXPECT_EQ(Call({"reproduce", "no-such-scenario"}).code, kExitConfig);
  EXPECT_EQ(Call({}).code, kExitConfig);
}

TEST(Cli, ResourceErrorExitsTwo) {
  const auto r = Call({"directions", "--set", "naturals", "--k", "3", "--bound", "100", "--budget", "1000"});
  EXPECT_EQ(r.code, kExitResource);
  EXPECT_NE(r.err.find("resource"), std::string::npos);
  EXPECT_EQ(Call({"gaps", "--set", "naturals", "--bound", "20000", "--low", "1", "--high", "2", "--resolution",
                  "10", "--scan", "pair"})
                .code,
            kExitResource);
}

TEST(Cli, ReproduceExitCodes) {
  EXPECT_EQ(Call({"reproduce", "two-partition-ratios"}).code, kExitOk);
  // The exact phi counts do not approach the constant monotonically.
  const auto r = Call({"reproduce", "phi-constant"});
  EXPECT_EQ(r.code, kExitScenarioFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, WitnessFindsThreeFour) {
  const auto r = Call({"witness", "--set", "naturals", "--k", "2", "--box", "0.59-0.61,0.79-0.81",
                       "--search-bound", "10"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find('3'), std::string::npos);
}

TEST(Config, LoadsAllSections) {
  TempDir dir;
  const auto path = dir.Write("run.ini",
                              "[experiment]\ncommand = cover\nsets = primes; blocks:q=5:1-2,3-5\nk = 2\n"
                              "distinct = true\nseed = 7\nworkers = 2\n"
                              "[bounds]\nbound = 1e4\nladder = 100, 1000, 10000\n"
                              "[diagnostics]\nepsilon = 0.02\nresolution = 500\n"
                              "[output]\nformat = csv\n[budget]\ntuples = 2e6\n");
  const ExperimentConfig c = LoadConfig(path);
  EXPECT_EQ(c.command, "cover");
  EXPECT_EQ(c.sets, (std::vector<std::string>{"primes", "blocks:q=5:1-2,3-5"}));
  EXPECT_EQ(c.k, 2u);
  EXPECT_EQ(c.distinct, true);
  EXPECT_EQ(c.bound, 10'000u);
  EXPECT_EQ(c.ladder, (std::vector<std::uint64_t>{100, 1000, 10'000}));
  EXPECT_EQ(c.epsilon, 0.02);
  EXPECT_EQ(c.resolution, 500u);
  EXPECT_EQ(c.tuple_budget, 2'000'000u);
  EXPECT_FALSE(c.window.has_value());
}

TEST(Config, ErrorsNameTheField) {
  TempDir dir;
  auto expect_error = [&](const std::string& text, const std::string& field) {
    const auto path = dir.Write("bad.ini", text);
    try {
      LoadConfig(path);
      ADD_FAILURE() << "no error for " << text;
    } catch (const ConfigError& e) {
      EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
    }
  };
  expect_error("[bounds]\nbound = lots\n", "bounds.bound");
  expect_error("[bounds]\nbonud = 10\n", "bounds.bonud");
  expect_error("[diagnostics]\nepsilon = small\n", "diagnostics.epsilon");
  expect_error("[experiment]\ndistinct = maybe\n", "experiment.distinct");
  expect_error("[extra]\nbound = 10\n", "extra.bound");
  EXPECT_THROW(LoadConfig(dir.path() / "absent.ini"), ConfigError);
}

TEST(Config, FlagsOverrideFile) {
  TempDir dir;
  const auto path = dir.Write("e.ini", "[experiment]\nsets = primes\n[bounds]\nbound = 30\n");
  const auto from_file = Call({"enumerate", "--config", path.string()});
  EXPECT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_NE(from_file.out.find("29"), std::string::npos);
  const auto overridden = Call({"enumerate", "--config", path.string(), "--bound", "20"});
  EXPECT_EQ(overridden.out.find("29"), std::string::npos);

  const auto other = dir.Write("o.ini", "[experiment]\ncommand = cover\n");
  const auto r = Call({"enumerate", "--config", other.string(), "--set", "primes", "--bound", "10"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("experiment.command"), std::string::npos);
}

TEST(Cli, OutputsAreByteIdentical) {
  TempDir dir;
  const std::vector<std::string> base = {"cover", "--set", "primes", "--k", "3", "--bound", "300",
                                         "--epsilon", "0.05", "--resolution", "20", "--sampled", "20000",
                                         "--seed", "11"};
  std::vector<std::string> outputs;
  for (const std::string workers : {"1", "4", "1"}) {
    for (const std::string format : {"structured", "csv"}) {
      const fs::path out = dir.path() / ("w" + workers + format + std::to_string(outputs.size()));
      auto args = base;
      args.insert(args.end(), {"--workers", workers, "--format", format, "--out", out.string()});
      ASSERT_EQ(Call(args).code, kExitOk);
      outputs.push_back(Slurp(out / (format == "csv" ? "cover.csv" : "cover.txt")));
      EXPECT_FALSE(outputs.back().empty());
    }
  }
  EXPECT_EQ(outputs[0], outputs[2]);
  EXPECT_EQ(outputs[0], outputs[4]);
  EXPECT_EQ(outputs[1], outputs[3]);
  EXPECT_EQ(outputs[1], outputs[5]);
}

TEST(Cli, ReproduceWritesBothFormats) {
  TempDir dir;
  ASSERT_EQ(Call({"reproduce", "ap-free", "--out", dir.path().string()}).code, kExitScenarioFailed);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir.path())) files += e.is_regular_file();
  EXPECT_EQ(files, 2);
}

}  // namespace
}  // namespace dirset::cli
