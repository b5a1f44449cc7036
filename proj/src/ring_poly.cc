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

#include "ringfunc/ring_poly.h"

#include <utility>

namespace ringfunc {

RingPoly::RingPoly(std::vector<Elem> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

RingPoly RingPoly::From(const Ring& ring, const Polynomial& f) {
  std::vector<Elem> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) out.push_back(ring.FromInteger(c));
  return RingPoly(std::move(out));
}

Elem Evaluate(const Ring& ring, const RingPoly& f, Elem x) {
  const auto& c = f.coefficients();
  Elem acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ring.Add(ring.Mul(acc, x), *it);
  return acc;
}

Elem Evaluate(const Ring& ring, const Polynomial& f, Elem x) {
  const auto& c = f.coefficients();
  Elem acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = ring.Add(ring.Mul(acc, x), ring.FromInteger(*it));
  }
  return acc;
}

RingPoly Derive(const Ring& ring, const RingPoly& f) {
  const auto& c = f.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Elem> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) {
    out[k - 1] = ring.Mul(ring.FromInt(static_cast<std::int64_t>(k)), c[k]);
  }
  return RingPoly(std::move(out));
}

RingPoly Add(const Ring& ring, const RingPoly& a, const RingPoly& b) {
  std::size_t len = std::max(a.coefficients().size(), b.coefficients().size());
  std::vector<Elem> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = ring.Add(a.coefficient(k), b.coefficient(k));
  return RingPoly(std::move(out));
}

RingPoly Sub(const Ring& ring, const RingPoly& a, const RingPoly& b) {
  std::size_t len = std::max(a.coefficients().size(), b.coefficients().size());
  std::vector<Elem> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = ring.Sub(a.coefficient(k), b.coefficient(k));
  return RingPoly(std::move(out));
}

RingPoly Mul(const Ring& ring, const RingPoly& a, const RingPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<Elem> out(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      out[i + j] = ring.Add(out[i + j], ring.Mul(ca[i], cb[j]));
    }
  }
  return RingPoly(std::move(out));
}

RingPoly Scale(const Ring& ring, Elem c, const RingPoly& a) {
  std::vector<Elem> out = a.coefficients();
  for (auto& v : out) v = ring.Mul(c, v);
  return RingPoly(std::move(out));
}

RingPoly Compose(const Ring& ring, const RingPoly& outer, const RingPoly& inner) {
  RingPoly result;
  const auto& c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    result = Add(ring, Mul(ring, result, inner), RingPoly({*it}));
  }
  return result;
}

Polynomial ToPolynomial(const Ring& ring, const RingPoly& f) {
  if (ring.is_dual() || (ring.kind() == RingKind::kFiniteField && ring.size() != ring.characteristic())) {
    throw InvalidArgument("ToPolynomial: coefficients of " + ring.Descriptor() +
                          " have no integer representative");
  }
  std::vector<Integer> out(f.coefficients().begin(), f.coefficients().end());
  return Polynomial(std::move(out));
}

std::string Format(const Ring& ring, const RingPoly& f) {
  if (!ring.is_dual() && !(ring.kind() == RingKind::kFiniteField && ring.size() != ring.characteristic())) {
    return ToPolynomial(ring, f).ToString();
  }
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    Elem c = f.coefficient(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    std::string cs = ring.Format(c);
    bool compound = cs.find('+') != std::string::npos;
    if (k == 0) {
      out += cs;
    } else {
      if (c != ring.one()) out += compound ? "(" + cs + ")" : cs;
      out += 'x';
      if (k >= 2) out += '^' + std::to_string(k);
    }
  }
  return out;
}

nlohmann::json ToJson(const RingPoly& f) { return f.coefficients(); }

void ForEachRingPoly(const Ring& ring, unsigned length,
                     const std::function<void(const std::vector<Elem>&)>& visit) {
  const Elem size = static_cast<Elem>(ring.size());
  std::vector<Elem> coeffs(length, 0);
  for (;;) {
    visit(coeffs);
    unsigned k = 0;
    while (k < length && ++coeffs[k] == size) coeffs[k++] = 0;
    if (k == length) return;
  }
}

std::vector<Elem> RingPolyCoefficients(const Ring& ring, unsigned length, std::uint64_t index) {
  std::vector<Elem> coeffs(length);
  for (unsigned k = 0; k < length; ++k) {
    coeffs[k] = static_cast<Elem>(index % ring.size());
    index /= ring.size();
  }
  return coeffs;
}

std::uint64_t CandidateCount(const Ring& ring, unsigned length, std::uint64_t cap,
                             const std::string& what) {
  std::uint64_t count = 1;
  for (unsigned k = 0; k < length; ++k) {
    if (count > cap / ring.size()) {
      throw SizeCapError(what + ": " + std::to_string(ring.size()) + "^" + std::to_string(length) +
                         " candidates exceed enumeration cap " + std::to_string(cap));
    }
    count *= ring.size();
  }
  return count;
}

}  // namespace ringfunc
