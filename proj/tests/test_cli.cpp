// Copyright 2026 The hystcon Authors
//
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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hystcon/hystcon.hpp"
#include "hystcon/instance_io.hpp"

namespace hystcon {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output.
CliRun cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(HYSTCON_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(HYSTCON_DATA_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hystcon_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, SolvesThreeElementInstance) {
  const CliRun r = cli("solve " + data("three_element.json"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "YES\n{}\n{1}\n{1,3}\n{1,2,3}\n");
}

TEST_F(CliTest, DecisionModeAndOracleAgree) {
  EXPECT_EQ(cli("solve --mode decision --oracle " + data("three_element.json")).status, 0);
  const CliRun no = cli("solve --oracle " + data("blocked.json"));
  EXPECT_EQ(no.status, 1) << no.out;
  EXPECT_NE(no.out.find("NO"), std::string::npos);
}

TEST_F(CliTest, SortInstanceReportsSwaps) {
  const CliRun r = cli("solve --json " + data("sort_two_cycles.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["answer"], "YES");
  EXPECT_EQ(j["swaps"], Json::parse("[[3,4],[1,2]]"));
  EXPECT_EQ(j["length"], 2);
  EXPECT_EQ(cli("solve --oracle " + data("sort_blocked.json")).status, 1);
  EXPECT_EQ(cli("solve --oracle " + data("sort_adjacent.json")).status, 0);
}

TEST_F(CliTest, NonInvolutionNamesPredicate) {
  const CliRun r = cli("solve " + data("sort_three_cycle.json"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("is_involution"), std::string::npos) << r.out;
}

TEST_F(CliTest, MalformedFileGivesLinePreciseError) {
  const std::string bad = write("bad.json", "{\n  \"kind\": \"hystcon\",\n  \"n\": 3\n  \"source\": []\n}\n");
  const CliRun r = cli("solve " + bad);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("line 4"), std::string::npos) << r.out;
  EXPECT_EQ(cli("solve " + (dir_ / "missing.json").string()).status, 2);
  EXPECT_EQ(cli("solve --mode fast " + data("three_element.json")).status, 2);
  EXPECT_EQ(cli("").status, 2);
}

TEST_F(CliTest, GenIsDeterministic) {
  const CliRun a = cli("gen --n 10 --seed 7");
  const CliRun b = cli("gen --n 10 --seed 7");
  ASSERT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, cli("gen --n 10 --seed 8").out);
}

TEST_F(CliTest, GenSortGivesInvolution) {
  for (int seed = 0; seed < 10; ++seed) {
    const CliRun r = cli("gen --kind sort --n 8 --seed " + std::to_string(seed));
    ASSERT_EQ(r.status, 0) << r.out;
    const auto inst = parse_instance(r.out);
    EXPECT_TRUE(is_involution(inst.sort.pi));
    EXPECT_EQ(filter_relevant(inst.sort).size(), inst.sort.forbidden.size());
  }
}

TEST_F(CliTest, GenHystconForbiddenLiesBetweenEndpoints) {
  for (int seed = 0; seed < 10; ++seed) {
    const CliRun r = cli("gen --n 12 --d 8 --density 0.5 --seed " + std::to_string(seed));
    ASSERT_EQ(r.status, 0) << r.out;
    const auto inst = parse_instance(r.out).hystcon;
    EXPECT_EQ(inst.target.level() - inst.source.level(), 8U);
    EXPECT_EQ(normalize_forbidden(inst).size(), inst.forbidden.size());
    EXPECT_EQ(inst.forbidden.size(), 48U);
  }
}

TEST_F(CliTest, GenRejectsBadRanges) {
  EXPECT_EQ(cli("gen --n 4 --d 5").status, 2);
  EXPECT_EQ(cli("gen --n 0").status, 2);
  EXPECT_EQ(cli("gen --density -1").status, 2);
  EXPECT_EQ(cli("gen --kind graph").status, 2);
}

TEST_F(CliTest, VerifyAcceptsSolverOutput) {
  for (const char* name : {"three_element.json", "blocked.json", "sort_two_cycles.json",
                           "sort_blocked.json", "sort_adjacent.json"}) {
    const CliRun s = cli("solve --json " + data(name));
    ASSERT_LE(s.status, 1) << s.out;
    const std::string sol = write("sol.json", s.out);
    const CliRun v = cli("verify " + data(name) + " " + sol);
    EXPECT_EQ(v.status, 0) << name << ": " << v.out;
  }
}

TEST_F(CliTest, VerifyRoundTripsGeneratedInstances) {
  for (int seed = 0; seed < 15; ++seed) {
    const std::string kind = seed % 3 == 0 ? "sort" : "hystcon";
    const std::string inst = write("inst.json", cli("gen --kind " + kind + " --n 9 --density 0.3 --seed " +
                                                    std::to_string(seed)).out);
    const CliRun s = cli("solve --json " + inst);
    ASSERT_LE(s.status, 1) << s.out;
    const CliRun v = cli("verify " + inst + " " + write("sol.json", s.out));
    EXPECT_EQ(v.status, 0) << v.out;
  }
}

TEST_F(CliTest, VerifyRejectsTamperedOrWrongLength) {
  const std::string inst = data("three_element.json");
  const std::string tampered = write(
      "t.json", R"({"kind":"hystcon","answer":"YES","path":[[],[2],[1,2],[1,2,3]],"length":3})");
  EXPECT_EQ(cli("verify " + inst + " " + tampered).status, 1);
  const std::string wrong = write(
      "w.json", R"({"kind":"hystcon","answer":"YES","path":[[],[1],[1,3],[1,2,3]],"length":4})");
  EXPECT_EQ(cli("verify " + inst + " " + wrong).status, 1);
  const std::string false_no = write("n.json", R"({"kind":"hystcon","answer":"NO","path":[],"length":null})");
  EXPECT_EQ(cli("verify " + inst + " " + false_no).status, 1);
  const std::string sort_swaps = write(
      "s.json",
      R"({"kind":"sort","answer":"YES","path":[[2,1,4,3],[2,1,3,4],[1,2,3,4]],"swaps":[[1,2],[3,4]],"length":2})");
  EXPECT_EQ(cli("verify " + data("sort_two_cycles.json") + " " + sort_swaps).status, 1);
}

TEST_F(CliTest, VerifyRejectsKindMismatch) {
  const CliRun s = cli("solve --json " + data("sort_two_cycles.json"));
  const std::string sol = write("sol.json", s.out);
  EXPECT_EQ(cli("verify " + data("three_element.json") + " " + sol).status, 2);
}

TEST_F(CliTest, OracleCapComesFromEnvironment) {
  const CliRun r = cli("solve --oracle " + data("three_element.json"), "HYSTCON_ORACLE_CAP=2");
  EXPECT_EQ(r.status, 2) << r.out;
  EXPECT_NE(r.out.find("cap"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace hystcon
