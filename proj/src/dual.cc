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

#include "ringfunc/dual.h"

#include "ringfunc/funcspace.h"

namespace ringfunc {

Ring DualRing(const Ring& base, const Limits& limits) { return Ring::Dual(base, limits); }

DualElement EvalDual(const RingPoly& g, const Ring& base, Elem a, Elem b) {
  return {Evaluate(base, g, a), base.Mul(b, Evaluate(base, Derive(base, g), a))};
}

DualElement EvalDual(const Polynomial& g, const Ring& base, Elem a, Elem b) {
  return EvalDual(RingPoly::From(base, g), base, a, b);
}

DualElement EvalDualPoly(const DualPolynomial& g, const Ring& base, Elem a, Elem b) {
  const Elem slope = Evaluate(base, Derive(base, g.real), a);
  return {Evaluate(base, g.real, a),
          base.Add(base.Mul(b, slope), Evaluate(base, g.eps, a))};
}

RingPoly LiftToDual(const Ring& dual, const DualPolynomial& g) {
  const std::size_t len =
      std::max(g.real.coefficients().size(), g.eps.coefficients().size());
  std::vector<Elem> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = dual.MakeDual(g.real.coefficient(k), g.eps.coefficient(k));
  }
  return RingPoly(std::move(out));
}

bool NullLiftHolds(const RingPoly& g, const Ring& base, const Limits& limits) {
  const Ring dual = DualRing(base, limits);
  const bool base_null = IsNull(g, base, limits);
  const bool lifted_null = IsNull(LiftToDual(dual, {RingPoly{}, g}), dual, limits);
  return base_null == lifted_null;
}

bool NullLiftHolds(const Polynomial& g, const Ring& base, const Limits& limits) {
  return NullLiftHolds(RingPoly::From(base, g), base, limits);
}

DualElement ToDualElement(const Ring& dual, Elem e) {
  return {dual.RealPart(e), dual.EpsPart(e)};
}

Elem FromDualElement(const Ring& dual, const DualElement& e) {
  return dual.MakeDual(e.real, e.eps);
}

std::string FormatDual(const Ring& base, const DualElement& e) {
  const Ring dual = DualRing(base, Limits::Unbounded());
  return dual.Format(FromDualElement(dual, e));
}

DualElement ParseDual(const Ring& base, std::string_view text) {
  const Ring dual = DualRing(base, Limits::Unbounded());
  return ToDualElement(dual, dual.ParseElement(text));
}

}  // namespace ringfunc
