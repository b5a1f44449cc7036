// Copyright 2026 The ringfunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the command-line binary and checks output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run Cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + RINGFUNC_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json Json(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(CliTest, TestVerb) {
  auto r = Cli("test --ring zpn:2,2 --poly '(x^2-x)^2' --prop null");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json(r)["result"], true);
  EXPECT_FALSE(Json(r).contains("oracle_agrees"));

  r = Cli("test --ring zpn:2,2 --poly x --prop unit-valued");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json(r)["result"], false);

  r = Cli("test --ring fq:3 --poly '2x^3+2x' --prop perm-dual --oracle");
  EXPECT_EQ(Json(r)["result"], true);
  EXPECT_EQ(Json(r)["oracle_agrees"], true);

  r = Cli("test --ring zpn:3,2 --poly 'x^3+x' --prop perm --oracle");
  EXPECT_EQ(Json(r)["oracle_agrees"], true);
}

TEST(CliTest, CountVerb) {
  EXPECT_EQ(Json(Cli("count --what uvpf --p 2 --n 2"))["value"], 16);
  EXPECT_EQ(Json(Cli("count --what beta --p 3 --n 2"))["value"], 6);
  const auto j = Json(Cli("count --what uvpf --p 3 --n 2 --brute-force"));
  EXPECT_EQ(j["value"], 5832);
  EXPECT_EQ(j["brute_force"], 5832);
  EXPECT_EQ(j["agrees"], true);
  EXPECT_EQ(Json(Cli("count --what kernel --p 3 --n 2 --brute-force"))["agrees"], true);
  // Large counts print as decimal strings.
  EXPECT_TRUE(Json(Cli("count --what polyfun --p 7 --n 12"))["value"].is_string());
}

TEST(CliTest, CanonicalVerb) {
  auto j = Json(Cli("canonical --poly 'x^4' --p 2 --n 2"));
  EXPECT_EQ(j["polynomial"], "x^2");
  j = Json(Cli("canonical --poly 'x^2+1' --p 3 --n 2 --uv"));
  EXPECT_EQ(j["p"], 3);
  EXPECT_TRUE(j.contains("layers"));
  EXPECT_EQ(Cli("canonical --poly 'x' --p 3 --n 2 --uv").code, 1);
}

TEST(CliTest, EnumerateVerb) {
  EXPECT_EQ(Json(Cli("enumerate --what stabilizer --ring zpn:2,2"))["order"], 4);
  EXPECT_EQ(Json(Cli("enumerate --what group --ring fq:2 --dual"))["order"], 2);
  EXPECT_EQ(Json(Cli("enumerate --what uvpf-forms --p 2 --n 1"))["count"], 1);
  EXPECT_EQ(Json(Cli("enumerate --what kernel --p 2 --n 2"))["count"], 16);
  EXPECT_EQ(Json(Cli("enumerate --what group --ring zm:4"))["order"], 8);
  const auto csv = Cli("enumerate --what uvpf-forms --p 2 --n 2 --format csv").out;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
}

TEST(CliTest, OutputIsDeterministic) {
  const std::string args = "enumerate --what group --ring fq:3 --dual --table";
  EXPECT_EQ(Cli(args).out, Cli(args).out);
  EXPECT_EQ(Cli(args + " --jobs 1").out, Cli(args + " --jobs 4").out);
}

TEST(CliTest, ExportWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "ringfunc_cli_export.csv";
  std::filesystem::remove(path);
  EXPECT_EQ(Cli("export --what stabilizer --ring zm:4 --format csv --out " + path.string()).code, 0);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str().rfind("index,null_part,uvpf\n", 0), 0u);
  std::filesystem::remove(path);
  EXPECT_NE(Cli("export --what stabilizer --ring zm:4").code, 0);
}

TEST(CliTest, VerifyVerb) {
  const auto r = Cli("verify --suite groups --max-size 9");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fq:3"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("test --ring zm:4 --poly 'x^' --prop null").code, 1);
  EXPECT_EQ(Cli("test --ring zq:4 --poly x --prop null").code, 1);
  EXPECT_EQ(Cli("test --ring zm:4 --poly x --prop bogus").code, 1);
  EXPECT_EQ(Cli("count --what uvpf --p 4 --n 2").code, 1);
  EXPECT_EQ(Cli("frobnicate").code, 1);
  EXPECT_EQ(Cli("count --what uvpf --p 3 --n 2 --brute-force", "RINGFUNC_CAP=1000").code, 3);
  EXPECT_EQ(Cli("count --what uvpf --p 3 --n 2 --brute-force --allow-large", "RINGFUNC_CAP=1000").code, 0);
  EXPECT_EQ(Cli("--help").code, 0);
}

}  // namespace
