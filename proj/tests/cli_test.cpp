// Copyright 2026 The mgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgsim/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace mgsim {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mgsim_cli_test_" + std::string(
                                    ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  nlohmann::json output() const { return nlohmann::json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* const kCircuit =
    "circuit n=2\n"
    "state + 0\n"
    "gate gvw 1 V=[0.8,0.6;-0.6,0.8] W=[1i,0;0,-1i]\n"
    "measure 2\n";

TEST_F(CliTest, RunReportsExpectation) {
  const std::string file = write("c.mg", kCircuit);
  for (const std::string engine : {"quadratic", "lie", "dense"}) {
    ASSERT_EQ(run({"run", file, "--engine", engine}), 0) << err_.str();
    const auto j = output();
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["engine"], engine);
    EXPECT_EQ(j["gates"], 1);
    EXPECT_EQ(j["observable"], "Z2");
    const cplx e = complex_from_json(j["expectation"]);
    EXPECT_LT(std::abs(e.imag()), 1e-12);
    EXPECT_NEAR(j["p0"].get<double>() + j["p1"].get<double>(), 1.0, 1e-12);
  }
}

TEST_F(CliTest, RunObservableAndModes) {
  const std::string file = write("c.mg", "circuit n=1\nstate +\n");
  ASSERT_EQ(run({"run", file, "--observable", "x1", "--c0-mode", "extra-line"}), 0) << err_.str();
  EXPECT_LT(std::abs(complex_from_json(output()["expectation"]) - 1.0), 1e-12);
  ASSERT_EQ(run({"run", file, "--engine", "dense", "--heisenberg-mode", "adjoint"}), 0);
  EXPECT_LT(std::abs(complex_from_json(output()["expectation"])), 1e-12);
}

TEST_F(CliTest, VerifyMatchgate) {
  const std::string good = write("good.json", "[[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,-1]]");
  ASSERT_EQ(run({"verify-matchgate", good}), 0) << err_.str();
  auto j = output();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_TRUE(j["is_matchgate"].get<bool>());
  EXPECT_EQ(j["identities"].size(), 10u);
  EXPECT_TRUE(j["eigenvector_predicate"].get<bool>());
  EXPECT_LT(j["max_residual"].get<double>(), 1e-15);

  const std::string swap = write("swap.json", "[[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]");
  ASSERT_EQ(run({"verify-matchgate", swap}), 0);
  j = output();
  EXPECT_FALSE(j["is_matchgate"].get<bool>());
  EXPECT_FALSE(j["eigenvector_predicate"].get<bool>());
  EXPECT_GT(j["max_residual"].get<double>(), 0.1);
}

TEST_F(CliTest, Classify) {
  const std::string id = write("id.json", "{\"matrix\": [[1,0],[0,\"0,1\"]]}");
  ASSERT_EQ(run({"classify", id}), 0) << err_.str();
  EXPECT_EQ(output()["classes"], nlohmann::json({"u1"}));
  const std::string d = write("d.json", "[[1,0,0,0],[0,2,0,0],[0,0,3,0],[0,0,0,6]]");
  ASSERT_EQ(run({"classify", d}), 0);
  const auto j = output();
  EXPECT_EQ(j["classes"], nlohmann::json({"diag", "gvw", "mg12"}));
  EXPECT_TRUE(j["is_matchgate"].get<bool>());
}

TEST_F(CliTest, CompareEngines) {
  const std::string file = write("c.mg", kCircuit);
  ASSERT_EQ(run({"compare", file}), 0) << err_.str();
  const auto j = output();
  EXPECT_EQ(j["results"].size(), 3u);
  for (const char* name : {"quadratic", "lie", "dense"}) EXPECT_TRUE(j["results"].contains(name));
  EXPECT_LT(j["max_deviation"].get<double>(), 1e-10);
}

TEST_F(CliTest, CompareSkipsDenseOnWideCircuits) {
  const std::string file = write("w.mg", "circuit n=13\nmeasure 13\n");
  ASSERT_EQ(run({"compare", file}), 0) << err_.str();
  const auto j = output();
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["skipped"], nlohmann::json({"dense"}));
}

TEST_F(CliTest, Bench) {
  ASSERT_EQ(run({"bench", "--n", "4,8", "--gates", "50", "--seed", "3"}), 0) << err_.str();
  const auto j = output();
  EXPECT_EQ(j["engine"], "quadratic");
  EXPECT_EQ(j["gates"], 50);
  ASSERT_EQ(j["points"].size(), 2u);
  EXPECT_EQ(j["points"][0]["n"], 4);
  EXPECT_TRUE(j["exponent"].is_number());
  EXPECT_GE(j["total_seconds"].get<double>(), 0.0);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  const std::string file = write("c.mg", kCircuit);
  EXPECT_EQ(run({"run", file, "--engine", "magic"}), 2);
  EXPECT_EQ(run({"run", file, "--no-such-flag"}), 2);
  EXPECT_EQ(run({"run", file, "--heisenberg-mode", "adjoint"}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
}

TEST_F(CliTest, DomainErrorsExitOne) {
  EXPECT_EQ(run({"run", (dir_ / "missing.mg").string()}), 1);
  const std::string bad = write("bad.mg", "circuit n=2\ngate nope\n");
  EXPECT_EQ(run({"run", bad}), 1);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  const std::string rule = write("rule.mg", "circuit n=3\ngate diag 1 3 [1,1,1,-1]\n");
  EXPECT_EQ(run({"run", rule}), 1);
  EXPECT_NE(err_.str().find("B11 B44 = B22 B33"), std::string::npos);
  const std::string wrong = write("wrong.json", "[[1,2,3],[4,5,6],[7,8,9]]");
  EXPECT_EQ(run({"classify", wrong}), 1);
}

}  // namespace
}  // namespace mgsim
