// Copyright 2026 The Gripper Tool Authors
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

#include "gripper_tool/cli.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "golden_cases.h"
#include "gripper_tool/design_file.h"
#include "gripper_tool/errors.h"
#include "gripper_tool/format.h"
#include "gripper_tool/payload.h"

namespace gripper_tool {
namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempDesign(const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("gripper_tool_cli_test_" + std::to_string(::getpid()) +
                     ".ini");
  std::ofstream(path) << text;
  return path.string();
}

std::string SampleText() {
  return testing::ReadFile(GRIPPER_TOOL_SAMPLE_DESIGN);
}

TEST(ParseRangeTest, InclusiveStops) {
  const auto alphas = ParseRange("5:85:5deg", true);
  ASSERT_EQ(alphas.size(), 17u);
  EXPECT_DOUBLE_EQ(alphas.front(), 5 * std::numbers::pi / 180);
  EXPECT_EQ(alphas.back(), 85 * kDegToRad);
  const auto ds = ParseRange("0:0.1:0.005", false);
  ASSERT_EQ(ds.size(), 21u);
  EXPECT_EQ(ds.front(), 0.0);
  EXPECT_EQ(ds.back(), 0.1);
}

TEST(ParseRangeTest, StopNotOnGrid) {
  const auto v = ParseRange("0:1:0.3", false);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_NEAR(v.back(), 0.9, 1e-15);
}

TEST(ParseRangeTest, SingleValue) {
  const auto v = ParseRange("0.02", false);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], 0.02);
}

TEST(ParseRangeTest, Malformed) {
  EXPECT_THROW(ParseRange("0:1", false), UsageError);
  EXPECT_THROW(ParseRange("0:1:0", false), UsageError);
  EXPECT_THROW(ParseRange("1:0:0.1", false), UsageError);
  EXPECT_THROW(ParseRange("a:1:0.1", false), UsageError);
  EXPECT_THROW(ParseRange("0:1:0.1deg", false), UsageError);
  EXPECT_THROW(ParseRange("0:1:1e-9", false), UsageError);
}

TEST(RunTest, UsageErrorsExitWithTwo) {
  EXPECT_EQ(Invoke({}).code, kExitUsageError);
  EXPECT_EQ(Invoke({"frobnicate", GRIPPER_TOOL_SAMPLE_DESIGN}).code,
            kExitUsageError);
  EXPECT_EQ(Invoke({"payload-sweep", GRIPPER_TOOL_SAMPLE_DESIGN}).code,
            kExitUsageError);
  EXPECT_EQ(Invoke({"payload-sweep", GRIPPER_TOOL_SAMPLE_DESIGN, "--alpha",
                    "5:85", "--d", "0"})
                .code,
            kExitUsageError);
  EXPECT_EQ(Invoke({"pose-sweep", GRIPPER_TOOL_SAMPLE_DESIGN, "--samples", "1"})
                .code,
            kExitUsageError);
  EXPECT_EQ(Invoke({"analyze", GRIPPER_TOOL_SAMPLE_DESIGN, "--jobs", "0"}).code,
            kExitUsageError);
}

TEST(RunTest, HelpExitsCleanly) {
  const Output o = Invoke({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("payload-sweep"), std::string::npos);
}

TEST(RunTest, ParseErrorExitsWithOneAndNamesLine) {
  std::string text = SampleText();
  text.replace(text.find("kappa = 0.2"), 11, "kappa = -0.2");
  const std::string path = TempDesign(text);
  const Output o = Invoke({"validate", path});
  std::remove(path.c_str());
  EXPECT_EQ(o.code, kExitDomainError);
  EXPECT_NE(o.err.find("SpringSpec invariant violated"), std::string::npos);
  EXPECT_NE(o.err.find("line "), std::string::npos);
}

TEST(RunTest, MissingFileExitsWithOne) {
  EXPECT_EQ(Invoke({"validate", "/nonexistent/design.ini"}).code,
            kExitDomainError);
}

TEST(RunTest, ValidateReportsViolations) {
  std::string text = SampleText();
  text.replace(text.find("p = 0.01"), 8, "p = 0.005");
  const std::string path = TempDesign(text);
  const Output o = Invoke({"validate", path});
  std::remove(path.c_str());
  EXPECT_EQ(o.code, kExitDomainError);
  EXPECT_NE(o.out.find("status=infeasible"), std::string::npos);
  EXPECT_NE(o.out.find("violation=parallel_clearance margin=-"),
            std::string::npos);
}

TEST(RunTest, AnalyzeMatchesLibrary) {
  const DesignFile design = LoadDesign(GRIPPER_TOOL_SAMPLE_DESIGN);
  const PayloadResult payload =
      MaxPayload(design.contact, design.grasp, *design.d_obj);
  const Output o = Invoke({"analyze", GRIPPER_TOOL_SAMPLE_DESIGN});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("max_payload_N=" + FormatNumber(payload.max_weight) +
                       "\n"),
            std::string::npos);
  EXPECT_NE(o.out.find("stroke_m=" + FormatNumber(Stroke(design.tool)) + "\n"),
            std::string::npos);
}

TEST(RunTest, AnalyzeObjectArmOverride) {
  const Output a = Invoke({"analyze", GRIPPER_TOOL_SAMPLE_DESIGN});
  const Output b =
      Invoke({"analyze", GRIPPER_TOOL_SAMPLE_DESIGN, "--d-obj", "0.08"});
  EXPECT_NE(a.out, b.out);
}

TEST(RunTest, AnalyzeInfeasibleHoldPrintsSentinel) {
  std::string text = SampleText();
  text.replace(text.find("f_n = 40"), 8, "f_n = 5");
  const std::string path = TempDesign(text);
  const Output o = Invoke({"analyze", path});
  std::remove(path.c_str());
  EXPECT_EQ(o.code, kExitDomainError);
  EXPECT_NE(o.out.find("holding_max_offset_m=INFEASIBLE"), std::string::npos);
  EXPECT_NE(o.out.find("stroke_m="), std::string::npos);
}

TEST(GoldenTest, SampleDesignOutputs) {
  for (const auto& c : testing::GoldenCases()) {
    const std::string expected =
        testing::ReadFile(std::string(GRIPPER_TOOL_GOLDEN_DIR) + "/" + c.file);
    ASSERT_FALSE(expected.empty()) << c.file;
    for (const char* jobs : {"1", "4"}) {
      std::vector<std::string> args = c.args;
      args.push_back(GRIPPER_TOOL_SAMPLE_DESIGN);
      args.push_back("--jobs");
      args.push_back(jobs);
      const Output o = Invoke(args);
      EXPECT_EQ(o.code, c.exit_code) << c.file << o.err;
      EXPECT_EQ(o.out, expected) << c.file << " --jobs " << jobs;
    }
  }
}

}  // namespace
}  // namespace gripper_tool
