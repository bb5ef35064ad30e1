#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace boolefock::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "boolefock");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("boolefock_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("BOOLEFOCK_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, RelationsPassesWithThreeReports) {
  const Result r = run_cli({"relations", "--seed", "7", "--samples", "500"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["reports"].size(), 3u);
  EXPECT_EQ(j["passed"], true);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(run_cli({"relations", "--samples", "0"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"relations", "--tolerance", "0"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"relations", "--tolerance", "-1e-3"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"relations", "--format", "xml"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"sweep", "--max-rank", "0"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"classify", "--max-word-len", "0", "--state", "x"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"classify"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ReportSchemaRoundTrips) {
  const Result r = run_cli({"relations", "--seed", "1", "--samples", "20"});
  for (const auto& report : json::parse(r.out)["reports"]) {
    EXPECT_TRUE(report.contains("name"));
    EXPECT_TRUE(report.contains("passed"));
    EXPECT_TRUE(report.contains("max_deviation"));
    EXPECT_TRUE(report.contains("samples_run"));
    EXPECT_TRUE(report.contains("witness"));
  }
}

TEST_F(CliTest, ClassifyVacuumState) {
  const std::string path = write("vac.json", R"({"gamma": 1, "T": {"eigenpairs": [{"weight": 1, "vector": {"#": [1, 0]}}]}})");
  const Result r = run_cli({"classify", "--state", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["symmetric"], true);
  EXPECT_EQ(j["expected"], true);
  EXPECT_EQ(j["iid"], true);
  EXPECT_EQ(j["consistent"], true);
}

TEST_F(CliTest, ClassifyNonExpectedPrintsCounterexample) {
  const std::string path =
      write("ne.json", R"({"gamma": 1, "T": {"eigenpairs": [{"weight": 1, "vector": {"#": [0.6, 0], "1": [0.8, 0]}}]}})");
  const Result r = run_cli({"classify", "--state", path, "--format", "human"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("counterexample ratio: 0.35999999999999999"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("counterexample witness:"), std::string::npos);
  EXPECT_NE(r.out.find("expected:   false"), std::string::npos);
}

TEST_F(CliTest, ClassifyRejectsBadFiles) {
  const Result truncated = run_cli({"classify", "--state", write("t.json", R"({"gamma": 1, "T": {"eig)")});
  EXPECT_EQ(truncated.code, kExitConfigError);
  EXPECT_NE(truncated.err.find("not valid JSON"), std::string::npos);

  const Result unnormalized = run_cli(
      {"classify", "--state",
       write("u.json", R"({"gamma": 1, "T": {"eigenpairs": [{"weight": 0.5, "vector": {"#": [1, 0]}}]}})")});
  EXPECT_EQ(unnormalized.code, kExitConfigError);
  EXPECT_NE(unnormalized.err.find("weights must sum to 1"), std::string::npos) << unnormalized.err;

  EXPECT_EQ(run_cli({"classify", "--state", (dir_ / "missing.json").string()}).code, kExitConfigError);
}

TEST_F(CliTest, SweepCsvHeaderAndRows) {
  const Result r = run_cli({"sweep", "--seed", "1", "--samples", "200", "--max-rank", "4", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "gamma,rank,symmetric,expected,iid,consistent,max_deviation");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string f; std::getline(cells, f, ',');) fields.push_back(f);
    ASSERT_EQ(fields.size(), 7u);
    EXPECT_EQ(fields[5], "true") << line;
  }
  EXPECT_EQ(rows, 200);
}

TEST_F(CliTest, SweepIsDeterministicAndSeedMatters) {
  const Result a = run_cli({"sweep", "--seed", "42", "--samples", "30"});
  const Result b = run_cli({"sweep", "--seed", "42", "--samples", "30"});
  const Result c = run_cli({"sweep", "--seed", "43", "--samples", "30"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
  const Result flag = run_cli({"sweep", "--seed", "9", "--samples", "12"});
  setenv("BOOLEFOCK_SEED", "9", 1);
  const Result env = run_cli({"sweep", "--samples", "12"});
  EXPECT_EQ(flag.out, env.out);
  setenv("BOOLEFOCK_SEED", "nine", 1);
  EXPECT_EQ(run_cli({"sweep", "--samples", "12"}).code, kExitConfigError);
  unsetenv("BOOLEFOCK_SEED");
}

TEST_F(CliTest, OutFileReceivesReport) {
  const std::string path = (dir_ / "out.csv").string();
  const Result r = run_cli({"sweep", "--seed", "2", "--samples", "5", "--format", "csv", "--out", path});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "gamma,rank,symmetric,expected,iid,consistent,max_deviation");
}

TEST_F(CliTest, ReplayReproducesClassifyWitness) {
  const std::string state =
      write("site.json", R"({"gamma": 1, "T": {"eigenpairs": [{"weight": 1, "vector": {"1": [1, 0]}}]}})");
  const Result classify = run_cli({"classify", "--state", state});
  ASSERT_EQ(classify.code, kExitOk) << classify.err;
  const json report = json::parse(classify.out)["reports"][0];
  ASSERT_EQ(report["passed"], false);

  const std::string witness = write("w.json", report.dump());
  const Result replay = run_cli({"replay", "--witness", witness});
  EXPECT_EQ(replay.code, kExitOk) << replay.err;
  EXPECT_EQ(json::parse(replay.out)["reproduced"], true);

  EXPECT_EQ(run_cli({"replay", "--witness", write("bad.json", R"({"kind": "nope"})")}).code, kExitConfigError);
}

}  // namespace
}  // namespace boolefock::cli
