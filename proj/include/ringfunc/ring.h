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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringfunc/limits.h"
#include "ringfunc/poly.h"

namespace ringfunc {

// Canonical element encoding; an index into the ring's enumeration order.
//
//   Z_m         residue r in [0, m-1]
//   F_{p^m}     sum c_i p^i over the coefficient vector (c_0, ..., c_{m-1}) of
//               the residue mod the field modulus; 0..p-1 is the prime field
//   R[al]       a + b*|R| for the dual number a + b*al
using Elem = std::uint32_t;

enum class RingKind { kModular, kPrimePower, kFiniteField, kDual };

bool IsPrime(std::uint64_t n);

// Smallest monic irreducible polynomial of degree `degree` over F_p, with
// candidates ordered lexicographically by (c_0, c_1, ..., c_{degree-1}).
Polynomial FindIrreducible(std::uint64_t p, unsigned degree);

// Exhaustive irreducibility test over F_p; `f` must have coefficients in
// [0, p-1] and a nonzero leading coefficient.
bool IsIrreducibleModP(const Polynomial& f, std::uint64_t p);

// Immutable handle to one of Z_m, Z_{p^n}, F_q or a dual extension R[al].
// Copies share state.
class Ring {
 public:
  static Ring Modular(std::uint64_t m);
  static Ring PrimePower(std::uint64_t p, unsigned n);
  static Ring FiniteField(std::uint64_t p, unsigned degree = 1);
  // R[al] with al^2 = 0. Nested duals are rejected; |R|^2 must fit `limits`.
  static Ring Dual(const Ring& base, const Limits& limits = {});

  // `zm:<m>`, `zpn:<p>,<n>`, `fq:<p>[,<m>]`, `dual:<inner>`.
  static Ring Parse(std::string_view descriptor, const Limits& limits = {});

  RingKind kind() const;
  std::string Descriptor() const;
  std::uint64_t size() const;
  std::uint64_t characteristic() const;

  bool is_field() const;
  bool is_dual() const { return kind() == RingKind::kDual; }

  // (p, n) when the ring is Z_{p^n} (including Z_p and prime fields).
  std::optional<std::pair<std::uint64_t, unsigned>> prime_power() const;

  // Base ring of a dual extension.
  const Ring& base() const;
  // Monic modulus of F_{p^m}; x is the generator.
  const Polynomial& field_modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem Add(Elem a, Elem b) const;
  Elem Sub(Elem a, Elem b) const;
  Elem Neg(Elem a) const;
  Elem Mul(Elem a, Elem b) const;
  Elem Pow(Elem a, std::uint64_t e) const;

  // Image of an integer under Z -> R.
  Elem FromInteger(const Integer& value) const;
  Elem FromInt(std::int64_t value) const;

  bool IsUnit(Elem a) const;
  std::optional<Elem> Inverse(Elem a) const;

  // Elements in enumeration order; requires |R| within `limits`.
  std::vector<Elem> Elements(const Limits& limits = {}) const;
  std::vector<Elem> Units(const Limits& limits = {}) const;

  // Dual helpers; only valid on dual rings.
  Elem MakeDual(Elem real, Elem eps) const;
  Elem RealPart(Elem e) const;
  Elem EpsPart(Elem e) const;

  std::string Format(Elem a) const;
  Elem ParseElement(std::string_view text) const;

  // Same ring up to descriptor spelling (zm:4 equals zpn:2,2; zm:3 equals fq:3).
  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Impl;
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

}  // namespace ringfunc
