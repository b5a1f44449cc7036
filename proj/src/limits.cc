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

#include "ringfunc/limits.h"

#include <cstdlib>
#include <limits>

namespace ringfunc {

Limits Limits::FromEnvironment() {
  Limits limits;
  if (const char* env = std::getenv("RINGFUNC_CAP"); env != nullptr && *env) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      throw InvalidArgument(std::string("RINGFUNC_CAP is not a positive integer: ") + env);
    }
    limits.enumeration = value;
  }
  return limits;
}

Limits Limits::Unbounded() {
  Limits limits;
  limits.ring_size = std::numeric_limits<std::uint32_t>::max();
  limits.enumeration = std::numeric_limits<std::uint64_t>::max();
  return limits;
}

void Limits::RequireRingSize(std::uint64_t size, const std::string& what) const {
  if (size > ring_size) {
    throw SizeCapError(what + ": ring of size " + std::to_string(size) +
                       " exceeds cap " + std::to_string(ring_size));
  }
}

void Limits::RequireEnumeration(std::uint64_t count, const std::string& what) const {
  if (count > enumeration) {
    throw SizeCapError(what + ": " + std::to_string(count) +
                       " items exceed enumeration cap " + std::to_string(enumeration));
  }
}

}  // namespace ringfunc
