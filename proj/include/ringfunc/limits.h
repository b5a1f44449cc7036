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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringfunc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input or precondition violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A ring or enumeration exceeded the configured size bound.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Bounds for enumeration-heavy operations.
//
// `ring_size` caps |R| for anything that walks every element of a ring
// (function tables, dual rings). `enumeration` caps the number of
// candidates or forms produced by the exhaustive enumerators.
struct Limits {
  static constexpr std::uint64_t kDefaultRingSize = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kDefaultEnumeration = 10'000'000;

  std::uint64_t ring_size = kDefaultRingSize;
  std::uint64_t enumeration = kDefaultEnumeration;
  unsigned jobs = 1;

  // Defaults, with `RINGFUNC_CAP` overriding the enumeration cap.
  static Limits FromEnvironment();

  // No caps at all; used behind an explicit override.
  static Limits Unbounded();

  void RequireRingSize(std::uint64_t size, const std::string& what) const;
  void RequireEnumeration(std::uint64_t count, const std::string& what) const;
};

}  // namespace ringfunc
