/* Copyright 2026 The roughpath Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "roughpath/cli.hpp"
#include "roughpath/experiments.hpp"
#include "roughpath/io.hpp"

namespace roughpath {
namespace {

namespace fs = std::filesystem;

const fs::path kData = ROUGHPATH_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "roughpath");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("roughpath-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  fs::path dir_;
};

TEST_F(CliTest, SignatureOfTwoSegmentPath) {
  const auto r = run({"signature", (kData / "two_segment.csv").string(), "--out", (dir_ / "sig").string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Json summary = read_json(dir_ / "sig" / "summary.json");
  EXPECT_EQ(summary["schema"], kSchemaVersion);
  EXPECT_EQ(summary["seed"], kDefaultSeed);
  EXPECT_EQ(summary["config"]["depth"], 2);
  const auto csv = slurp(dir_ / "sig" / "report.csv");
  EXPECT_EQ(csv.rfind("schema,config_hash,seed,", 0), 0u);
  const std::string hash = summary["config_hash"];
  EXPECT_NE(csv.find(hash), std::string::npos);
  // Level 2 of the path (1,0) then (0,1): S^{11} = 1/2, S^{12} = 1, S^{21} = 0, S^{22} = 1/2.
  EXPECT_NE(csv.find(",2,1 1,0.5\n"), std::string::npos);
  EXPECT_NE(csv.find(",2,1 2,1\n"), std::string::npos);
  EXPECT_NE(csv.find(",2,2 1,0\n"), std::string::npos);
  EXPECT_NE(csv.find(",2,2 2,0.5\n"), std::string::npos);
}

TEST_F(CliTest, VerifyTheoremOnIdenticalPaths) {
  const auto p = (kData / "two_segment.csv").string();
  const auto r = run({"verify-theorem", p, p, "--levels", "3", "--pairs", "4", "--out", (dir_ / "v").string()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
}

TEST_F(CliTest, UsageAndSchemaErrorsExitTwo) {
  auto r = run({"signature", "--depth", "two", (kData / "two_segment.csv").string()});
  EXPECT_EQ(r.code, cli::kSchemaError);
  EXPECT_EQ(Json::parse(r.err)["error"], "schema");
  EXPECT_EQ(run({"no-such-command"}).code, cli::kSchemaError);
  EXPECT_EQ(run({"signature", "--bogus", "1"}).code, cli::kSchemaError);
  EXPECT_EQ(run({"neoclassical", "--order", "3", "--out", (dir_ / "n").string()}).code, cli::kSchemaError);
  const auto cfg = write("bad.json", R"({"unknown_key": 1})");
  EXPECT_EQ(run({"signature", "--config", cfg.string(), (kData / "two_segment.csv").string()}).code,
            cli::kSchemaError);
}

TEST_F(CliTest, MissingInputExitsThree) {
  const auto r = run({"signature", (dir_ / "missing.csv").string(), "--out", (dir_ / "m").string()});
  EXPECT_EQ(r.code, cli::kUnreadableInput);
  const Json record = Json::parse(r.err);
  EXPECT_EQ(record["error"], "unreadable_input");
  EXPECT_EQ(record["code"], 3);
  EXPECT_TRUE(record.contains("message"));
}

TEST_F(CliTest, NonConvergenceExitsFour) {
  const auto cfg = write("short.json", R"({"max_order": 3})");
  const auto r = run({"extend", "--config", cfg.string(), (kData / "two_segment.csv").string(), "--out",
                      (dir_ / "e").string()});
  EXPECT_EQ(r.code, cli::kNonConvergent) << r.err;
  EXPECT_EQ(Json::parse(r.err)["error"], "non_convergent");
}

TEST_F(CliTest, PausingPathExitsFive) {
  const auto p = write("pause.csv", "time,x1\n0,0\n0.25,1\n0.75,1\n1,2\n");
  const auto r = run({"extend", p.string(), "--depth", "3", "--out", (dir_ / "e").string()});
  EXPECT_EQ(r.code, cli::kNonMonotone) << r.err;
}

TEST_F(CliTest, FlagsOverrideConfig) {
  const auto cfg = write("cfg.json", R"({"depth": 4, "out": "ignored"})");
  const auto out = dir_ / "o";
  ASSERT_EQ(run({"signature", "--config", cfg.string(), "--depth", "3", "--out", out.string(),
                 (kData / "two_segment.csv").string()})
                .code,
            cli::kOk);
  EXPECT_EQ(read_json(out / "summary.json")["config"]["depth"], 3);
}

TEST_F(CliTest, ReportsAreByteIdentical) {
  for (int i = 0; i < 2; ++i) {
    const auto r = run({"partition", (kData / "two_segment.csv").string(), "--order", "5", "--seed", "99", "--out",
                        (dir_ / ("run" + std::to_string(i))).string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
  }
  for (const char* file : {"report.csv", "summary.json"}) {
    const auto a = slurp(dir_ / "run0" / file);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir_ / "run1" / file)) << file;
  }
  EXPECT_EQ(read_json(dir_ / "run0" / "summary.json")["seed"], 99);
}

}  // namespace
}  // namespace roughpath
