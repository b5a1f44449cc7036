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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ringfunc/poly.h"
#include "ringfunc/ring.h"

namespace ringfunc {

// Polynomial with coefficients taken in a particular ring, lowest degree
// first. Needed wherever coefficients live outside the prime subring
// (F_{p^m} with m > 1) and in the enumeration loops.
class RingPoly {
 public:
  RingPoly() = default;
  explicit RingPoly(std::vector<Elem> coefficients);

  // Reduces every integer coefficient into `ring`.
  static RingPoly From(const Ring& ring, const Polynomial& f);

  const std::vector<Elem>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Elem coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Elem{0};
  }

  friend bool operator==(const RingPoly&, const RingPoly&) = default;
  friend auto operator<=>(const RingPoly&, const RingPoly&) = default;

 private:
  std::vector<Elem> coefficients_;
};

// Horner evaluation, reducing at every step.
Elem Evaluate(const Ring& ring, const RingPoly& f, Elem x);
Elem Evaluate(const Ring& ring, const Polynomial& f, Elem x);

RingPoly Derive(const Ring& ring, const RingPoly& f);
RingPoly Add(const Ring& ring, const RingPoly& a, const RingPoly& b);
RingPoly Sub(const Ring& ring, const RingPoly& a, const RingPoly& b);
RingPoly Mul(const Ring& ring, const RingPoly& a, const RingPoly& b);
RingPoly Scale(const Ring& ring, Elem c, const RingPoly& a);
// outer(inner(x)).
RingPoly Compose(const Ring& ring, const RingPoly& outer, const RingPoly& inner);

// Integer lift with coefficients in [0, m-1]. Only for Z_m and prime
// fields, where the element index is the residue.
Polynomial ToPolynomial(const Ring& ring, const RingPoly& f);

std::string Format(const Ring& ring, const RingPoly& f);

// Element indices, lowest degree first.
nlohmann::json ToJson(const RingPoly& f);

// Calls `visit` on all |R|^length coefficient vectors of length `length`
// (degree < length), c_0 varying fastest.
void ForEachRingPoly(const Ring& ring, unsigned length,
                     const std::function<void(const std::vector<Elem>&)>& visit);

// The `index`-th vector in ForEachRingPoly order.
std::vector<Elem> RingPolyCoefficients(const Ring& ring, unsigned length, std::uint64_t index);

// |R|^length, or throws SizeCapError if it exceeds `cap`.
std::uint64_t CandidateCount(const Ring& ring, unsigned length, std::uint64_t cap,
                             const std::string& what);

}  // namespace ringfunc
