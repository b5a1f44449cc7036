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

#include <string>
#include <string_view>

#include "ringfunc/limits.h"
#include "ringfunc/poly.h"
#include "ringfunc/ring.h"
#include "ringfunc/ring_poly.h"

namespace ringfunc {

// a + b*al in R[al], kept as the explicit pair (a, b) over the base ring.
struct DualElement {
  Elem real = 0;
  Elem eps = 0;

  friend bool operator==(const DualElement&, const DualElement&) = default;
};

// g = g1 + g2*al with g1, g2 over the base ring.
struct DualPolynomial {
  RingPoly real;
  RingPoly eps;
};

// R[al]; elements enumerate as a + b*|R|, so R sits inside as {(a, 0)}.
Ring DualRing(const Ring& base, const Limits& limits = {});

// g(a + b al) = g(a) + b g'(a) al.
DualElement EvalDual(const RingPoly& g, const Ring& base, Elem a, Elem b);
DualElement EvalDual(const Polynomial& g, const Ring& base, Elem a, Elem b);

// g(a + b al) = g1(a) + (b g1'(a) + g2(a)) al.
DualElement EvalDualPoly(const DualPolynomial& g, const Ring& base, Elem a, Elem b);

// The polynomial over R[al] whose k-th coefficient is g1_k + g2_k al.
RingPoly LiftToDual(const Ring& dual, const DualPolynomial& g);

// Checks [g]_R == 0  <=>  [g al]_{R[al]} == 0 by exhausting both rings.
bool NullLiftHolds(const RingPoly& g, const Ring& base, const Limits& limits = {});
bool NullLiftHolds(const Polynomial& g, const Ring& base, const Limits& limits = {});

DualElement ToDualElement(const Ring& dual, Elem e);
Elem FromDualElement(const Ring& dual, const DualElement& e);

// "a+b*al"; parsing also accepts "a" and "b*al".
std::string FormatDual(const Ring& base, const DualElement& e);
DualElement ParseDual(const Ring& base, std::string_view text);

}  // namespace ringfunc
