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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ringfunc/limits.h"

namespace ringfunc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitCap = 3;
inline constexpr int kExitVerify = 4;

struct TestOptions {
  std::string ring;
  std::string poly;
  std::string prop;
  bool oracle = false;
};

struct CountOptions {
  std::string what;
  std::uint64_t p = 0;
  unsigned n = 0;
  bool brute_force = false;
};

struct CanonicalOptions {
  std::string poly;
  std::uint64_t p = 0;
  unsigned n = 0;
  bool uv = false;
};

struct EnumerateOptions {
  std::string what;
  std::string ring;
  std::uint64_t p = 0;
  unsigned n = 0;
  bool dual = false;
  std::string format = "json";
  std::string out;
  bool table = false;
};

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t max_size = 27;
  std::string out;
};

// Each command writes its result to `out` and returns an exit code. Library
// errors propagate; the caller maps them to exit codes.
int RunTest(const TestOptions& options, const Limits& limits, std::ostream& out);
int RunCount(const CountOptions& options, const Limits& limits, std::ostream& out);
int RunCanonical(const CanonicalOptions& options, const Limits& limits, std::ostream& out);
int RunEnumerate(const EnumerateOptions& options, const Limits& limits, std::ostream& out);
int RunVerify(const VerifyOptions& options, const Limits& limits, std::ostream& out);

}  // namespace ringfunc::cli
