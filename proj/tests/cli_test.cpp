#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "beetle/experiment.hpp"
#include "beetle/text_io.hpp"

namespace fs = std::filesystem;

namespace {

int cli(const std::string& args) {
  const std::string cmd = std::string("\"") + BEETLE_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("beetle_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST(Cli, RunThenSummarizeReproducesSummary) {
  const auto dir = scratch("run");
  beetle::io::write_file(dir / "c.json",
                         R"({"problem": {"type": "michalewicz", "dimension": 2},
                             "stopping": {"max_iterations": 50},
                             "experiment": {"trials": 4}})");
  ASSERT_EQ(cli("run --config " + q(dir / "c.json") + " --out " + q(dir / "out") + " --workers 2 --seed 5"), 0);
  for (const char* f : {"trials.csv", "summary.json", "config_snapshot.json"}) EXPECT_TRUE(fs::exists(dir / "out" / f));

  const auto records = beetle::trials_from_csv(beetle::io::read_file(dir / "out" / "trials.csv"));
  ASSERT_EQ(records.size(), 24u);
  EXPECT_EQ(records.front().seed, 5u);

  ASSERT_EQ(cli("summarize --trials " + q(dir / "out" / "trials.csv") + " --out " + q(dir / "s.json")), 0);
  EXPECT_EQ(beetle::io::read_file(dir / "s.json"), beetle::io::read_file(dir / "out" / "summary.json"));
}

TEST(Cli, GenDataWritesCsvAndMetadata) {
  const auto dir = scratch("gen");
  const auto out = dir / "d.csv";
  ASSERT_EQ(cli("gen-data --config " + q(fs::path(BEETLE_SOURCE_DIR) / "configs" / "rc_dataset.json") + " --out " +
                q(out)),
            0);
  EXPECT_TRUE(fs::exists(fs::path(out.string() + ".meta.json")));
  // Regenerating the shipped dataset reproduces it exactly.
  EXPECT_EQ(beetle::io::read_file(out),
            beetle::io::read_file(fs::path(BEETLE_SOURCE_DIR) / "data" / "rc_noiseless.csv"));
}

TEST(Cli, UsageAndConfigErrorsExitOne) {
  const auto dir = scratch("usage");
  EXPECT_EQ(cli(""), 1);
  EXPECT_EQ(cli("run --out " + q(dir)), 1);
  EXPECT_EQ(cli("frobnicate"), 1);
  beetle::io::write_file(dir / "bad.json", R"({"experiment": {"trails": 3}})");
  EXPECT_EQ(cli("run --config " + q(dir / "bad.json") + " --out " + q(dir / "o")), 1);
  beetle::io::write_file(dir / "broken.json", "{not json");
  EXPECT_EQ(cli("run --config " + q(dir / "broken.json") + " --out " + q(dir / "o")), 1);
  EXPECT_EQ(cli("run --config " + q(dir / "bad.json") + " --out " + q(dir / "o") + " --workers 0"), 1);
  // A dataset path that does not exist is a configuration problem.
  beetle::io::write_file(dir / "rc.json", R"({"problem": {"type": "rc", "dataset": "missing.csv"}})");
  EXPECT_EQ(cli("run --config " + q(dir / "rc.json") + " --out " + q(dir / "o")), 1);
}

TEST(Cli, RuntimeFailuresExitTwo) {
  const auto dir = scratch("runtime");
  // Output directory cannot be created because a regular file is in the way.
  beetle::io::write_file(dir / "c.json", R"({"stopping": {"max_iterations": 5}, "experiment": {"trials": 1}})");
  beetle::io::write_file(dir / "blocker", "");
  EXPECT_EQ(cli("run --config " + q(dir / "c.json") + " --out " + q(dir / "blocker" / "o")), 2);
  // Malformed trials table.
  beetle::io::write_file(dir / "t.csv", "algorithm,k\nbas,1\n");
  EXPECT_EQ(cli("summarize --trials " + q(dir / "t.csv") + " --out " + q(dir / "s.json")), 2);
}
