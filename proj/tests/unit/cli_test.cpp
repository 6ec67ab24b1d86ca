// Copyright 2026 The acalg Authors. All Rights Reserved.
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

#include "acalg_tools/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace acalg::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("acalg_cli_test_" + name);
}

TEST(Cli, Dims) {
  const Result r = run_cli({"dims", "--max", "5", "--carrier", "A"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1,4,9,18,36,72\n");
  const Result g = run_cli({"dims", "--max", "4", "--carrier", "g"});
  EXPECT_EQ(g.out, "4,3,2,3\n");
}

TEST(Cli, NormalFormAndBracket) {
  EXPECT_EQ(run_cli({"normal-form", "mu.mubar"}).out, "-1*delbar.del - 1*del.delbar - 1*mubar.mu\n");
  EXPECT_EQ(run_cli({"bracket", "mubar", "del"}).out, "-1*delbar.delbar\n");
}

TEST(Cli, CohomologyOfD) {
  const Result r = run_cli({"cohomology", "--diff", "d", "--carrier", "g", "--max", "4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dims: 2,0,0,0");
  const Result j = run_cli({"--format", "json", "cohomology", "--diff", "st", "2", "1", "--carrier", "g", "--max", "3", "--reps"});
  const auto data = nlohmann::json::parse(j.out);
  EXPECT_EQ(data["table"][0]["dim"], 2);
  EXPECT_EQ(data["table"][0]["representatives"].size(), 2u);
  const Result b = run_cli({"--format", "csv", "cohomology", "--diff", "mubar", "--carrier", "B", "--max", "2"});
  EXPECT_EQ(b.out, "degree,dim\n0,1\n1,1\n2,1\n");
}

TEST(Cli, MaurerCartan) {
  const Result r = run_cli({"mc", "check", "1", "0", "0", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "false (xw-yz=1)\n");
  const auto data = nlohmann::json::parse(run_cli({"--format", "json", "mc", "check", "8", "4", "2", "1"}).out);
  EXPECT_TRUE(data["is_mc"].get<bool>());
  EXPECT_EQ(data["h1_dim"], 2);
  EXPECT_EQ(data["nullity"], 0);
  EXPECT_EQ(run_cli({"mc", "nullity", "0", "0"}).out, "2\n");
  EXPECT_EQ(run_cli({"mc", "nullity", "1", "0"}).out, "1\n");
  EXPECT_EQ(run_cli({"mc", "tangent", "0", "0"}).code, kDomainError);
}

TEST(Cli, ExitCodes) {
  const Result syntax = run_cli({"normal-form", "[del"});
  EXPECT_EQ(syntax.code, kUsageError);
  const auto j = nlohmann::json::parse(syntax.out);
  EXPECT_EQ(j["error"]["kind"], "SyntaxError");
  EXPECT_EQ(j["error"]["column"], 5);

  const Result domain = run_cli({"cohomology", "--diff", "mubar+mu", "--max", "2"});
  EXPECT_EQ(domain.code, kDomainError);
  EXPECT_EQ(nlohmann::json::parse(domain.out)["error"]["kind"], "NotADifferential");

  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--format", "xml", "dims"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--format", "csv", "mc", "check", "1", "1", "1", "1"}).code, kUsageError);
}

TEST(Cli, RepFiles) {
  const auto path = temp_path("rep.json");
  const Result emit = run_cli({"rep", "example", "--alpha", "1/2", "--beta", "i", "--emit", path.string()});
  ASSERT_EQ(emit.code, kOk);
  EXPECT_EQ(run_cli({"rep", "verify", path.string()}).code, kOk);
  EXPECT_EQ(run_cli({"rep", "faithful", path.string()}).code, kOk);

  const auto bad = temp_path("bad.json");
  std::ofstream(bad) << R"({"vectors": [{"label": "x", "p": 0}], "actions": {}})";
  const Result r = run_cli({"rep", "verify", bad.string()});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"]["kind"], "SchemaError");
  EXPECT_EQ(run_cli({"rep", "verify", temp_path("missing.json").string()}).code, kDomainError);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> invocations = {
      {"--format", "json", "cohomology", "--diff", "d", "--max", "4", "--reps"},
      {"--format", "json", "lie-basis", "--degree", "4"},
      {"--seed", "7", "check", "--samples", "5"},
      {"--format", "json", "rep", "example", "--gamma", "3/4"},
  };
  for (const auto& args : invocations) {
    const Result a = run_cli(args);
    const Result b = run_cli(args);
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace acalg::cli
