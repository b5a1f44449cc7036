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

#include "ringfunc/funcspace.h"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace ringfunc {

FunctionTable::FunctionTable(Ring ring, std::vector<Elem> values)
    : ring_(std::move(ring)), values_(std::move(values)) {
  if (values_.size() != ring_.size()) {
    throw InvalidArgument("function table over " + ring_.Descriptor() + " needs " +
                          std::to_string(ring_.size()) + " values, got " +
                          std::to_string(values_.size()));
  }
  for (Elem v : values_) {
    if (v >= ring_.size()) {
      throw InvalidArgument("function table value " + std::to_string(v) + " is not in " +
                            ring_.Descriptor());
    }
  }
}

FunctionTable FunctionTable::Identity(const Ring& ring, const Limits& limits) {
  return FunctionTable(ring, ring.Elements(limits));
}

FunctionTable FunctionTable::Constant(const Ring& ring, Elem value, const Limits& limits) {
  limits.RequireRingSize(ring.size(), "constant table");
  return FunctionTable(ring, std::vector<Elem>(ring.size(), value));
}

bool FunctionTable::IsZero() const {
  return std::all_of(values_.begin(), values_.end(), [](Elem v) { return v == 0; });
}

bool FunctionTable::IsBijective() const {
  std::vector<bool> seen(values_.size(), false);
  for (Elem v : values_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FunctionTable::IsUnitValued() const {
  return std::all_of(values_.begin(), values_.end(), [this](Elem v) { return ring_.IsUnit(v); });
}

std::size_t TableHash::operator()(const std::vector<Elem>& values) const noexcept {
  // FNV-1a over the element indices.
  std::uint64_t h = 1469598103934665603ull;
  for (Elem v : values) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

FunctionTable Induce(const RingPoly& f, const Ring& ring, const Limits& limits) {
  limits.RequireRingSize(ring.size(), "inducing a function on " + ring.Descriptor());
  std::vector<Elem> values(ring.size());
  for (Elem r = 0; r < values.size(); ++r) values[r] = Evaluate(ring, f, r);
  return FunctionTable(ring, std::move(values));
}

FunctionTable Induce(const Polynomial& f, const Ring& ring, const Limits& limits) {
  return Induce(RingPoly::From(ring, f), ring, limits);
}

bool IsNull(const RingPoly& f, const Ring& ring, const Limits& limits) {
  return Induce(f, ring, limits).IsZero();
}

bool IsNull(const Polynomial& f, const Ring& ring, const Limits& limits) {
  return Induce(f, ring, limits).IsZero();
}

bool IsUnitValued(const RingPoly& f, const Ring& ring, const Limits& limits) {
  return Induce(f, ring, limits).IsUnitValued();
}

bool IsUnitValued(const Polynomial& f, const Ring& ring, const Limits& limits) {
  return Induce(f, ring, limits).IsUnitValued();
}

bool IsPermBruteForce(const RingPoly& f, const Ring& ring, const Limits& limits) {
  return Induce(f, ring, limits).IsBijective();
}

bool IsPermBruteForce(const Polynomial& f, const Ring& ring, const Limits& limits) {
  return Induce(f, ring, limits).IsBijective();
}

bool PermCriterionLocal(const Polynomial& f, std::uint64_t p, unsigned n, DerivativeDomain domain) {
  if (n < 1) throw InvalidArgument("PermCriterionLocal: exponent must be >= 1");
  const Ring residue = Ring::FiniteField(p);
  if (!IsPermBruteForce(f, residue)) return false;
  if (n == 1) return true;
  const RingPoly derivative = RingPoly::From(residue, f.Derive());
  if (domain == DerivativeDomain::kMaximalIdealOnly) {
    // Every a in M reduces to 0 in the residue field.
    return Evaluate(residue, derivative, 0) != 0;
  }
  for (Elem a = 0; a < p; ++a) {
    if (Evaluate(residue, derivative, a) == 0) return false;
  }
  return true;
}

bool PermCriterionDual(const RingPoly& f, const Ring& base, const Limits& limits) {
  if (base.is_dual()) throw InvalidArgument("PermCriterionDual expects the base ring");
  return IsPermBruteForce(f, base, limits) && IsUnitValued(Derive(base, f), base, limits);
}

bool PermCriterionDual(const Polynomial& f, const Ring& base, const Limits& limits) {
  return PermCriterionDual(RingPoly::From(base, f), base, limits);
}

namespace {

void RequireSameRing(const FunctionTable& f, const FunctionTable& g, const char* what) {
  if (!(f.ring() == g.ring())) {
    throw InvalidArgument(std::string(what) + ": ring mismatch (" + f.ring().Descriptor() +
                          " vs " + g.ring().Descriptor() + ")");
  }
}

}  // namespace

FunctionTable Pointwise(PointwiseOp op, const FunctionTable& f, const FunctionTable& g) {
  RequireSameRing(f, g, "Pointwise");
  const Ring& ring = f.ring();
  std::vector<Elem> out(f.size());
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r] = op == PointwiseOp::kAdd ? ring.Add(f.values()[r], g.values()[r])
                                     : ring.Mul(f.values()[r], g.values()[r]);
  }
  return FunctionTable(ring, std::move(out));
}

FunctionTable Compose(const FunctionTable& f, const FunctionTable& g) {
  RequireSameRing(f, g, "Compose");
  std::vector<Elem> out(f.size());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = f.values()[g.values()[r]];
  return FunctionTable(f.ring(), std::move(out));
}

FunctionTable InverseBijection(const FunctionTable& g) {
  if (!g.IsBijective()) throw InvalidArgument("InverseBijection: table is not a bijection");
  std::vector<Elem> out(g.size());
  for (Elem r = 0; r < out.size(); ++r) out[g.values()[r]] = r;
  return FunctionTable(g.ring(), std::move(out));
}

FunctionTable InvertUnitTable(const FunctionTable& f) {
  const Ring& ring = f.ring();
  const bool modular = ring.kind() == RingKind::kModular || ring.kind() == RingKind::kPrimePower;
  std::unordered_map<Elem, Elem> inverse;
  std::vector<Elem> units;
  std::vector<Elem> out(f.size());
  for (std::size_t r = 0; r < out.size(); ++r) {
    const Elem v = f.values()[r];
    auto it = inverse.find(v);
    if (it == inverse.end()) {
      std::optional<Elem> found;
      if (modular) {
        found = ring.Inverse(v);
      } else {
        if (units.empty()) units = ring.Units(Limits::Unbounded());
        for (Elem s : units) {
          if (ring.Mul(v, s) == ring.one()) {
            found = s;
            break;
          }
        }
      }
      if (!found) {
        throw InvalidArgument("InvertUnitTable: value " + ring.Format(v) + " at " +
                              ring.Format(static_cast<Elem>(r)) + " is not a unit");
      }
      it = inverse.emplace(v, *found).first;
    }
    out[r] = it->second;
  }
  return FunctionTable(ring, std::move(out));
}

RingPoly Lagrange(const FunctionTable& f) {
  const Ring& ring = f.ring();
  if (!ring.is_field()) throw InvalidArgument("Lagrange: " + ring.Descriptor() + " is not a field");
  // f(x) = sum_a f(a) (1 - (x - a)^{q-1})
  const std::uint64_t q = ring.size();
  RingPoly result;
  for (Elem a = 0; a < q; ++a) {
    const Elem value = f.values()[a];
    if (value == 0) continue;
    const RingPoly linear({ring.Neg(a), ring.one()});
    RingPoly power({ring.one()});
    for (std::uint64_t k = 0; k + 1 < q; ++k) power = Mul(ring, power, linear);
    RingPoly indicator = Sub(ring, RingPoly({ring.one()}), power);
    result = Add(ring, result, Scale(ring, value, indicator));
  }
  return result;
}

RingPoly RealizePair(const FunctionTable& g_table, const FunctionTable& f_table) {
  RequireSameRing(g_table, f_table, "RealizePair");
  const Ring& ring = g_table.ring();
  if (!ring.is_field()) throw InvalidArgument("RealizePair: " + ring.Descriptor() + " is not a field");
  if (!g_table.IsBijective()) throw InvalidArgument("RealizePair: G is not a bijection");
  if (!f_table.IsUnitValued()) throw InvalidArgument("RealizePair: F takes the value 0");
  const RingPoly f0 = Lagrange(g_table);
  const RingPoly f1 = Lagrange(f_table);
  std::vector<Elem> field_null(ring.size() + 1, 0);
  field_null[ring.size()] = ring.one();
  field_null[1] = ring.Neg(ring.one());
  return Add(ring, f0, Mul(ring, Sub(ring, Derive(ring, f0), f1), RingPoly(std::move(field_null))));
}

nlohmann::json ToJson(const FunctionTable& table) {
  return {{"ring", table.ring().Descriptor()}, {"values", table.values()}};
}

FunctionTable FunctionTableFromJson(const nlohmann::json& j, const Limits& limits) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("values")) {
    throw InvalidArgument("function table JSON needs \"ring\" and \"values\"");
  }
  Ring ring = Ring::Parse(j.at("ring").get<std::string>(), limits);
  limits.RequireRingSize(ring.size(), "function table");
  return FunctionTable(std::move(ring), j.at("values").get<std::vector<Elem>>());
}

}  // namespace ringfunc
