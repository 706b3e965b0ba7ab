// Copyright 2026 The morphplan Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "morphplan/cli.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace morphplan::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return io::parse_text(out); }
};

Run run_cli(const std::vector<std::string>& args, Environment env = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, env);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / "morphplan_cli_test";
    fs::remove_all(dir_);
    detail::export_datasets(dir_);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static std::string path(const std::string& rel) { return (dir_ / rel).string(); }

  static fs::path dir_;
};

fs::path CliTest::dir_;

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  const auto r = run_cli({"frobnicate"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_THAT(r.err, HasSubstr("Usage"));
  EXPECT_EQ(run_cli({"solve", "--bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"solve", "--instance", path("table8.json"), "--solver",
                     "magic"}).code,
            kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
  EXPECT_EQ(run_cli({"plan"}).code, kUsage);
}

TEST_F(CliTest, UnreadableFileIsUsageError) {
  const auto r = run_cli({"solve", "--instance", path("missing.json")});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_EQ(r.json()["kind"], "io");
  EXPECT_THAT(r.err, HasSubstr("cannot read"));
}

TEST_F(CliTest, ValidateModelAndConfigurations) {
  auto r = run_cli({"validate", path("wireless.json"), path("configs/S5G.json"),
                    path("configs/S7G.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["valid"], true);

  Json bad = io::parse_text(detail::read_file(path("configs/S5G.json")));
  bad["assignment"].erase("B442");
  detail::write_file(path("bad.json"), io::to_text(bad));
  r = run_cli({"validate", path("wireless.json"), path("bad.json")});
  EXPECT_EQ(r.code, kFindings);
  EXPECT_EQ(r.json()["configurations"][0]["findings"][0], "unassigned leaf: B442");
}

TEST_F(CliTest, ValidateBrokenModel) {
  Json model = io::parse_text(detail::read_file(path("enterprise.json")));
  model["nodes"][0]["children"][0]["alternatives"] = Json::array();
  detail::write_file(path("broken.json"), io::to_text(model));
  const auto r = run_cli({"validate", path("broken.json")});
  EXPECT_EQ(r.code, kFindings);
  EXPECT_THAT(r.json()["findings"][0].get<std::string>(),
              HasSubstr("empty alternative list"));
}

TEST_F(CliTest, Diff) {
  auto r = run_cli({"diff", "--model", path("wireless.json"), "--from", "S1G",
                    "--to", "S1G"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.json()["deltas"].empty());
  r = run_cli({"diff", "--model", path("wireless.json"), "--from",
               path("configs/S6G.json"), "--to", "S7G"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["deltas"],
            Json::parse(R"([{"leaf":"B442","from":"B442_1","to":"B442_2"}])"));
  EXPECT_EQ(run_cli({"diff", "--model", path("wireless.json"), "--from", "S9G",
                     "--to", "S1G"}).code,
            kUsage);
}

TEST_F(CliTest, SolveOperationSetAndBareInstance) {
  auto r = run_cli({"solve", "--instance", path("table9.json"), "--solver", "dp"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["profit"], "17.0");
  EXPECT_EQ(r.json()["cost"], "17.5");
  EXPECT_EQ(r.json()["selected"], Json::parse(R"(["V1_2","V2_2","V3_2"])"));

  r = run_cli({"solve", "--instance", path("table8_instance.json"), "--solver",
               "exhaustive"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["profit"], "17.6");
  EXPECT_EQ(r.json()["selection"], Json::parse("[2, null, 3, 3, 2]"));
  EXPECT_EQ(r.json()["selected"], Json::parse(R"(["x1_2","x3_3","x4_3","x5_2"])"));
}

TEST_F(CliTest, SolveInfeasibleExclusiveZeroBudget) {
  Json inst = io::parse_text(detail::read_file(path("table9_instance.json")));
  inst["budget"] = "0.0";
  inst["comparator"] = "exclusive";
  detail::write_file(path("zero.json"), io::to_text(inst));
  const auto r = run_cli({"solve", "--instance", path("zero.json")});
  EXPECT_EQ(r.code, kInfeasible);
  EXPECT_EQ(r.json()["kind"], "solver");
}

TEST_F(CliTest, VerifyReferenceSelection) {
  auto r = run_cli({"verify", "--instance", path("table8.json"), "--selection",
                    "U1_2,U2_2,U3_3,U4_3,U5_2"});
  EXPECT_EQ(r.code, kInfeasible);
  EXPECT_EQ(r.json()["findings"][0], "budget exceeded: 24.0 > 19.0");
  EXPECT_THAT(r.err, HasSubstr("budget exceeded: 24.0 > 19.0"));

  r = run_cli({"verify", "--instance", path("table8.json"), "--selection",
               "U1_2,U3_3,U4_3,U5_2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["profit"], "17.6");

  r = run_cli({"verify", "--instance", path("table8.json"), "--selection",
               "U6_2"});
  EXPECT_EQ(r.code, kFindings);
  EXPECT_EQ(r.json()["findings"][0], "unknown operation U6_2");
}

TEST_F(CliTest, PlanFromFilesAndBuiltinExample) {
  auto r = run_cli({"plan", "--model", path("wireless.json"), "--initial", "S5G",
                    "--stages", path("table8.json") + "," + path("table9.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["chain"], "S5G => S5G_adv1 => S5G_adv2");

  r = run_cli({"plan", "--paper-example", "--solver", "greedy"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["stages"][0]["solver"], "greedy");
  EXPECT_FALSE(r.json()["stages"][0]["greedy_trace"].empty());
}

TEST_F(CliTest, PlanStopsAtMismatchedStage) {
  const auto r = run_cli({"plan", "--model", path("wireless.json"), "--initial",
                          path("configs/S5G.json"), "--stages",
                          path("table9.json")});
  EXPECT_EQ(r.code, kFindings);
  EXPECT_EQ(r.json()["status"], "failed");
  EXPECT_EQ(r.json()["failure"]["kind"], "precondition");
}

TEST_F(CliTest, ReportFromChainDocument) {
  const auto r = run_cli({"report", "--strategy", path("chain.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["chain"], "S5G => S5G_adv1 => S5G_adv2");
  const auto builtin = run_cli({"report", "--paper-example"});
  EXPECT_EQ(builtin.code, kOk);
  EXPECT_EQ(builtin.json()["stages"][0]["selected_operations"],
            r.json()["stages"][0]["selected_operations"]);
}

TEST_F(CliTest, TextReportColourFollowsEnvironment) {
  const std::vector<std::string> args{"report", "--paper-example", "--format",
                                      "text"};
  EXPECT_EQ(run_cli(args, {false, false}).out.find('\x1b'), std::string::npos);
  EXPECT_EQ(run_cli(args, {true, true}).out.find('\x1b'), std::string::npos);
  EXPECT_NE(run_cli(args, {false, true}).out.find('\x1b'), std::string::npos);
}

TEST_F(CliTest, ExportListsFiles) {
  const auto r = run_cli({"datasets", "export", path("again")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["written"].size(), 17u);
  EXPECT_EQ(detail::read_file(path("again/table8.json")),
            detail::read_file(path("table8.json")));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> cmds{
      {"validate", path("wireless.json"), path("configs/S1G.json")},
      {"solve", "--instance", path("table8.json"), "--solver", "greedy"},
      {"plan", "--paper-example"},
      {"report", "--strategy", path("chain.json"), "--format", "text"},
  };
  for (const auto& args : cmds) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace morphplan::cli
