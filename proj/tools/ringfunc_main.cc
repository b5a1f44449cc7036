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

// ringfunc: polynomial functions over finite rings and their dual numbers.

#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "commands.h"
#include "ringfunc/limits.h"

namespace cli = ringfunc::cli;

int main(int argc, char** argv) {
  CLI::App app{"Polynomial functions, permutations and unit-valued functions over finite rings."};
  app.require_subcommand(1);
  app.fallthrough();

  bool allow_large = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--allow-large", allow_large, "Lift the ring-size and enumeration caps");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  cli::TestOptions test;
  auto* test_cmd = app.add_subcommand("test", "Decide a property of a polynomial over a ring");
  test_cmd->add_option("--ring", test.ring, "Ring descriptor")->required();
  test_cmd->add_option("--poly", test.poly, "Polynomial with integer coefficients")->required();
  test_cmd->add_option("--prop", test.prop, "Property")
      ->required()
      ->check(CLI::IsMember({"null", "unit-valued", "perm", "perm-dual"}));
  test_cmd->add_flag("--oracle", test.oracle, "Cross-check against brute force");

  cli::CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Exact counts mod p^n");
  count_cmd->add_option("--what", count.what, "Quantity")
      ->required()
      ->check(CLI::IsMember({"polyfun", "uvpf", "kernel", "beta"}));
  count_cmd->add_option("--p", count.p, "Prime")->required();
  count_cmd->add_option("--n", count.n, "Exponent")->required();
  count_cmd->add_flag("--brute-force", count.brute_force, "Also enumerate and compare");

  cli::CanonicalOptions canonical;
  auto* canonical_cmd = app.add_subcommand("canonical", "Canonical form of a polynomial mod p^n");
  canonical_cmd->add_option("--poly", canonical.poly, "Polynomial")->required();
  canonical_cmd->add_option("--p", canonical.p, "Prime")->required();
  canonical_cmd->add_option("--n", canonical.n, "Exponent")->required();
  canonical_cmd->add_flag("--uv", canonical.uv, "Unit-valued canonical form");

  cli::EnumerateOptions enumerate;
  auto add_enumerate_options = [&enumerate](CLI::App* cmd) {
    cmd->add_option("--what", enumerate.what, "Object")
        ->required()
        ->check(CLI::IsMember({"group", "stabilizer", "uvpf-forms", "kernel"}));
    cmd->add_option("--ring", enumerate.ring, "Ring descriptor");
    cmd->add_option("--p", enumerate.p, "Prime");
    cmd->add_option("--n", enumerate.n, "Exponent");
    cmd->add_flag("--dual", enumerate.dual, "Permutations of R[al] induced by R[x]");
    cmd->add_option("--format", enumerate.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--table", enumerate.table, "Include the multiplication table");
  };
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List group elements or forms");
  add_enumerate_options(enumerate_cmd);
  enumerate_cmd->add_option("--out", enumerate.out, "Write to a file instead of stdout");
  auto* export_cmd = app.add_subcommand("export", "Write an enumeration to a file");
  add_enumerate_options(export_cmd);
  export_cmd->add_option("--out", enumerate.out, "Output path")->required();

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the theorems on small rings");
  verify_cmd->add_option("--suite", verify.suite, "Suite")
      ->check(CLI::IsMember({"all", "dual", "groups", "canonical", "counting"}));
  verify_cmd->add_option("--max-size", verify.max_size, "Largest ring enumerated; R[al] counts as |R|^2");
  verify_cmd->add_option("--out", verify.out, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInput;
  }

  ringfunc::Limits limits = allow_large ? ringfunc::Limits::Unbounded() : ringfunc::Limits::FromEnvironment();
  limits.jobs = jobs;

  try {
    if (*test_cmd) return cli::RunTest(test, limits, std::cout);
    if (*count_cmd) return cli::RunCount(count, limits, std::cout);
    if (*canonical_cmd) return cli::RunCanonical(canonical, limits, std::cout);
    if (*enumerate_cmd || *export_cmd) return cli::RunEnumerate(enumerate, limits, std::cout);
    if (*verify_cmd) return cli::RunVerify(verify, limits, std::cout);
  } catch (const ringfunc::SizeCapError& e) {
    std::cerr << "error: " << e.what() << " (use --allow-large to override)\n";
    return cli::kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInput;
  }
  return cli::kExitInput;
}
