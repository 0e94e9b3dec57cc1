#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "loccert/families.hpp"
#include "loccert/state_io.hpp"

using namespace loccert;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("loccert_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenerateTiles) {
  const auto r = run({"generate", "tiles", "-o", path("tiles.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load(path("tiles.json")).size(), 5u);
}

TEST_F(CliTest, GenerateGenTiles1) {
  const auto r = run({"generate", "gentiles1", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(from_json_string(r.out).size(), 25u);
}

TEST_F(CliTest, GenerateRotatedDominoes) {
  const auto r = run({"generate", "rotated-dominoes", "--theta", "0.3,0.3,0.3,0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(from_json_string(r.out).size(), 9u);
}

TEST_F(CliTest, GenerateHalderVariants) {
  EXPECT_EQ(from_json_string(run({"generate", "halder", "--variant", "reduced12"}).out).size(), 12u);
  EXPECT_EQ(from_json_string(run({"generate", "halder-omit-diag24"}).out).size(), 24u);
  EXPECT_EQ(from_json_string(run({"generate", "bell"}).out).size(), 4u);
}

TEST_F(CliTest, GenerateErrors) {
  EXPECT_EQ(run({"generate", "nonsense"}).code, 2);
  EXPECT_EQ(run({"generate", "gentiles1", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"generate", "rotated-dominoes", "--theta", "0.3,0.3"}).code, 2);
  EXPECT_EQ(run({"generate", "rotated-dominoes", "--theta", "2,0.3,0.3,0.3"}).code, 2);
  EXPECT_EQ(run({"generate", "halder", "--variant", "half"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST_F(CliTest, CertifyFileAndFamilies) {
  ASSERT_EQ(run({"generate", "tiles", "-o", path("tiles.json")}).code, 0);
  const auto r = run({"certify", path("tiles.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["certificate"]["verdict"], "CERTIFIED_INDISCRIMINABLE");
  EXPECT_EQ(report["certificate"]["parties"][0]["span_rank"], 8);
  EXPECT_GT(report["certificate"]["parties"][0]["pair_count"].get<int>(), 0);
  EXPECT_EQ(report["tool"], "loccert");
  EXPECT_TRUE(report.contains("version"));
  EXPECT_EQ(report["config"]["tol"], 1e-9);
}

TEST_F(CliTest, CertifyHalderAllBipartite) {
  const auto r = run({"certify", "halder-full", "--cut", "all-bipartite"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["strong_nlwe"], "CERTIFIED");
  EXPECT_EQ(report["cuts"].size(), 3u);
}

TEST_F(CliTest, CertifyReducedAllBipartiteIsInconclusive) {
  EXPECT_EQ(run({"certify", "halder-reduced12", "--cut", "all-bipartite"}).code, 1);
}

TEST_F(CliTest, CertifyExplicitCut) {
  const auto r = run({"certify", "halder-full", "--cut", "0|1,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["certificate"]["parties"][1]["span_rank"], 80);
}

TEST_F(CliTest, CertifyTwoQubitDemoIsInconclusive) {
  EXPECT_EQ(run({"certify", "two-qubit-demo"}).code, 1);
}

TEST_F(CliTest, CertifyErrors) {
  EXPECT_EQ(run({"certify", "halder-full", "--cut", "0,,1|2"}).code, 2);
  EXPECT_EQ(run({"certify", "halder-full", "--cut", "0|1"}).code, 2);
  EXPECT_EQ(run({"certify", "tiles", "--cut", "all-bipartite"}).code, 2);
  EXPECT_EQ(run({"certify", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"certify", "bell"}).code, 2);
  std::ofstream(path("bad.json")) << "{\"version\": 1}";
  EXPECT_EQ(run({"certify", path("bad.json")}).code, 2);
}

TEST_F(CliTest, UpbTiles) {
  const auto r = run({"upb", "tiles"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["extendibility"]["is_unextendible"], true);
  EXPECT_EQ(report["is_minimal"], true);
  EXPECT_EQ(report["theorem2"], "CERTIFIED_INDISCRIMINABLE");
  EXPECT_EQ(report["min_states_bound"], 5);
}

TEST_F(CliTest, UpbExtendibleWitness) {
  const auto s = StateSet::from_products(
      {2, 2}, {{basis_ket(2, 0), basis_ket(2, 0)}, {basis_ket(2, 1), basis_ket(2, 1)}});
  save(s, path("pair.json"));
  const auto r = run({"upb", path("pair.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["extendibility"]["is_unextendible"], false);
  EXPECT_EQ(report["extendibility"]["witness_partition"].size(), 2u);
}

TEST_F(CliTest, UpbBudgetExceeded) {
  EXPECT_EQ(run({"upb", "gentiles1", "--n", "8"}).code, 3);
  EXPECT_EQ(run({"upb", "tiles", "--budget", "5"}).code, 3);
}

TEST_F(CliTest, BoundBell) {
  const auto r = run({"bound", "bell", "--seed", "0", "-o", path("bell.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path("bell.json"));
  const auto report = json::parse(f);
  EXPECT_NEAR(report["p_err_lower"].get<double>(), 0.25, 0.02);
  EXPECT_EQ(report["config"]["seed"], 0);
  EXPECT_GE(report["curve"].size(), 21u);
}

TEST_F(CliTest, BoundTwoQubitDemo) {
  const auto r = run({"bound", "two-qubit-demo", "--restarts", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(json::parse(r.out)["p_err_lower"].get<double>(), 1e-4);
}

TEST_F(CliTest, BoundIsByteIdentical) {
  const std::vector<std::string> args{"bound", "tiles", "--restarts", "4", "--r-steps", "6", "--seed", "3"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, BoundRejectsBadOptions) {
  EXPECT_EQ(run({"bound", "bell", "--r-steps", "1"}).code, 2);
  EXPECT_EQ(run({"bound", "bell", "--restarts", "zero"}).code, 2);
}

}  // namespace
