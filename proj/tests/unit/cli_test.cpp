// Copyright 2026 The duality-lab Authors
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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace duality_lab::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "duality-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path temp_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("duality_lab_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"scan"}).code, kExitUsage);
  EXPECT_EQ(invoke({"scan", "--N", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"scan", "--N", "4", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"scan", "--N", "4", "--xi", "1.5", "--strategy", "frio"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--samples", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"saturation", "--N", "25"}).code, kExitUsage);
  EXPECT_EQ(invoke({"povm", "--N", "3", "--support", "0,1", "--coeffs-sq", "0.5,0.4"}).code,
            kExitUsage);
}

TEST(CliTest, Examples) {
  const auto eq = invoke({"example", "six-path-equally-spaced"});
  ASSERT_EQ(eq.code, kExitOk);
  EXPECT_NE(eq.out.find("C=0.613"), std::string::npos);
  EXPECT_NE(eq.out.find("K_me=0.387"), std::string::npos);
  EXPECT_NE(eq.out.find("sum=1.000"), std::string::npos);
  const auto adj = invoke({"example", "six-path-adjacent"});
  EXPECT_NE(adj.out.find("K_me=0.178"), std::string::npos);
  EXPECT_NE(adj.out.find("sum=0.791"), std::string::npos);
  const auto non = invoke({"example", "six-path-nonadjacent"});
  EXPECT_NE(non.out.find("K_me=0.129"), std::string::npos);
  EXPECT_NE(non.out.find("sum=0.742"), std::string::npos);

  const auto bad = invoke({"example", "nope"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("six-path-adjacent"), std::string::npos);
}

TEST(CliTest, SaturationSummary) {
  const auto r = invoke({"saturation", "--N", "12"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("2,3,4,6 (eta-2 = 4)"), std::string::npos);
  const auto six = invoke({"saturation", "--N", "6"});
  EXPECT_NE(six.out.find("{0,3}"), std::string::npos);
  EXPECT_NE(six.out.find("{1,3,5}"), std::string::npos);
}

TEST(CliTest, ScanIsByteIdentical) {
  const auto dir = temp_dir("scan");
  const std::vector<std::string> base{"scan", "--N", "5", "--n", "3", "--samples", "200",
                                      "--strategy", "conc", "--xi", "0,0.5", "--seed", "3"};
  auto a = base;
  a.insert(a.end(), {"--out", (dir / "a.csv").string()});
  auto b = base;
  b.insert(b.end(), {"--out", (dir / "b.csv").string()});
  ASSERT_EQ(invoke(a).code, kExitOk);
  ASSERT_EQ(invoke(b).code, kExitOk);
  const auto csv = slurp(dir / "a.csv");
  EXPECT_EQ(csv, slurp(dir / "b.csv"));
  EXPECT_EQ(csv.rfind("N,n,strategy,xi,K,C,sum,support\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 401);
  const auto manifest = nlohmann::json::parse(slurp(dir / "a.csv.json"));
  EXPECT_EQ(manifest["point_count"], 400);
  fs::remove_all(dir);
}

TEST(CliTest, ScanToStdout) {
  const auto r = invoke({"scan", "--N", "3", "--samples", "5", "--bins", "0"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(CliTest, UnwritableOutputIsIoError) {
  EXPECT_EQ(invoke({"scan", "--N", "3", "--samples", "5", "--out",
                    "/nonexistent-dir/x/y.csv"}).code,
            kExitIo);
}

TEST(CliTest, EnumerateUniform) {
  const auto r = invoke({"enumerate-uniform", "--N", "4"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 16);
}

TEST(CliTest, PovmJson) {
  const auto r = invoke({"povm", "--N", "3", "--support", "0,1,2", "--coeffs-sq", "0.6,0.2,0.2",
                         "--strategy", "conc", "--xi", "0.5"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["elements"].size(), 6u);
  EXPECT_EQ(j["strategy"], "conc");
}

TEST(CliTest, VerifyExitCodes) {
  EXPECT_EQ(invoke({"verify", "--samples", "100"}).code, kExitOk);
  const auto fault = invoke({"verify", "--samples", "100", "--inject-fault"});
  EXPECT_EQ(fault.code, kExitPropertyFailure);
  EXPECT_NE(fault.out.find("FAIL closed-form-oracle-agreement"), std::string::npos);
}

}  // namespace
}  // namespace duality_lab::cli
