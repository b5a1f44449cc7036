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
#include <string>
#include <vector>

#include "json.hpp"
#include "ringfunc/limits.h"

namespace ringfunc {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  std::string ToText() const;
  nlohmann::json ToJson() const;
};

enum class Suite { kAll, kDual, kGroups, kCanonical, kCounting };

Suite ParseSuite(const std::string& name);

// Runs the theorem checks of `suite` on the small-ring grid
// {Z_2, Z_3, Z_4, F_2, F_3, F_4} and on Z_{p^n} for small p^n. `max_size`
// bounds the largest ring any check enumerates (a dual ring counts with
// |R|^2 elements); checks over bigger rings are skipped. Deterministic for a
// fixed build.
VerifyReport RunVerification(Suite suite, std::uint64_t max_size = 27, const Limits& limits = {});

}  // namespace ringfunc
