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
#include <functional>
#include <vector>

#include "json.hpp"
#include "ringfunc/limits.h"
#include "ringfunc/poly.h"
#include "ringfunc/ring.h"
#include "ringfunc/ring_poly.h"

namespace ringfunc {

// A function R -> R stored as its value table in the ring's enumeration
// order. Houses induced functions [f]_R, the constants of F(R) and id_R.
class FunctionTable {
 public:
  FunctionTable(Ring ring, std::vector<Elem> values);

  static FunctionTable Identity(const Ring& ring, const Limits& limits = {});
  static FunctionTable Constant(const Ring& ring, Elem value, const Limits& limits = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Elem>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Elem operator()(Elem r) const { return values_[r]; }

  bool IsZero() const;
  bool IsBijective() const;
  bool IsUnitValued() const;

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.values_ == b.values_ && a.ring_ == b.ring_;
  }

 private:
  Ring ring_;
  std::vector<Elem> values_;
};

struct TableHash {
  std::size_t operator()(const std::vector<Elem>& values) const noexcept;
  std::size_t operator()(const FunctionTable& table) const noexcept {
    return (*this)(table.values());
  }
};

FunctionTable Induce(const Polynomial& f, const Ring& ring, const Limits& limits = {});
FunctionTable Induce(const RingPoly& f, const Ring& ring, const Limits& limits = {});

bool IsNull(const Polynomial& f, const Ring& ring, const Limits& limits = {});
bool IsNull(const RingPoly& f, const Ring& ring, const Limits& limits = {});
bool IsUnitValued(const Polynomial& f, const Ring& ring, const Limits& limits = {});
bool IsUnitValued(const RingPoly& f, const Ring& ring, const Limits& limits = {});

// Bijectivity of the induced table; the oracle for the criteria below.
bool IsPermBruteForce(const Polynomial& f, const Ring& ring, const Limits& limits = {});
bool IsPermBruteForce(const RingPoly& f, const Ring& ring, const Limits& limits = {});

// Which residues the derivative condition of the local-ring permutation
// criterion ranges over.
enum class DerivativeDomain {
  kAllResidues,      // f'(a) != 0 mod p for every a in Z_p (f' unit-valued)
  kMaximalIdealOnly  // f'(a) != 0 mod p only for a in pZ_{p^n}
};

// Permutation test on Z_{p^n} without touching Z_{p^n}: f mod p permutes
// Z_p and, when n >= 2, f' does not vanish mod p on `domain`. On a field
// (n = 1) only the residue condition applies.
bool PermCriterionLocal(const Polynomial& f, std::uint64_t p, unsigned n,
                        DerivativeDomain domain = DerivativeDomain::kAllResidues);

// f permutes R[al] iff f permutes R and f' is unit-valued on R.
bool PermCriterionDual(const Polynomial& f, const Ring& base, const Limits& limits = {});
bool PermCriterionDual(const RingPoly& f, const Ring& base, const Limits& limits = {});

enum class PointwiseOp { kAdd, kMul };

FunctionTable Pointwise(PointwiseOp op, const FunctionTable& f, const FunctionTable& g);

// (f o g)(r) = f(g(r)).
FunctionTable Compose(const FunctionTable& f, const FunctionTable& g);

// Inverse of a bijective table under composition.
FunctionTable InverseBijection(const FunctionTable& g);

// Pointwise multiplicative inverse. Throws InvalidArgument if some value
// is not a unit, i.e. the table is not in F(R)^x.
FunctionTable InvertUnitTable(const FunctionTable& f);

// Unique polynomial of degree <= q-1 over F_q inducing `f`.
RingPoly Lagrange(const FunctionTable& f);

// g = f0 + (f0' - f1)(x^q - x) with f0 = Lagrange(g_table), f1 = Lagrange(f_table),
// so [g] = g_table, [g'] = f_table and deg g <= 2q-1.
RingPoly RealizePair(const FunctionTable& g_table, const FunctionTable& f_table);

// {"ring": <descriptor>, "values": [...]}.
nlohmann::json ToJson(const FunctionTable& table);
FunctionTable FunctionTableFromJson(const nlohmann::json& j, const Limits& limits = {});

}  // namespace ringfunc
