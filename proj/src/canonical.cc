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

#include "ringfunc/canonical.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "parallel.h"

namespace ringfunc {

namespace {

Integer IntPow(const Integer& base, std::uint64_t e) {
  Integer result = 1;
  for (std::uint64_t k = 0; k < e; ++k) result *= base;
  return result;
}

Integer Mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer ModInverse(const Integer& a, const Integer& m) {
  Integer old_r = Mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error("ModInverse: not invertible");
  return Mod(old_s, m);
}

void RequirePrime(std::uint64_t p, const char* what) {
  if (!IsPrime(p)) throw InvalidArgument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

// Canonical terms of the function mod p^n whose values at 0, 1, ... are
// `points`; needs at least beta(n) points.
//
// With f = sum b_j (x)_j, the j-th forward difference at 0 is j! b_j, so b_j
// is known mod p^{n - v_p(j!)} and its base-p digits are the a_ij.
std::vector<CanonicalTerm> FormFromPoints(std::vector<Integer> points, std::uint64_t p, unsigned n) {
  const std::uint64_t terms = Beta(p, n);
  if (points.size() < terms) throw Error("FormFromPoints: too few points");
  points.resize(terms);
  const Integer modulus = IntPow(p, n);
  for (auto& v : points) v = Mod(v, modulus);

  std::vector<CanonicalTerm> out;
  Integer unit_part = 1;  // p-free part of j!
  for (std::uint64_t j = 0; j < terms; ++j) {
    if (j > 0) {
      std::uint64_t k = j;
      while (k % p == 0) k /= p;
      unit_part *= k;
    }
    const Integer delta = points[0];
    for (std::size_t t = 0; t + 1 < points.size(); ++t) {
      points[t] = Mod(points[t + 1] - points[t], modulus);
    }
    points.pop_back();

    const std::uint64_t v = VpFactorial(p, j);
    const Integer pv = IntPow(p, v);
    if (delta % pv != 0) {
      throw InvalidArgument("table is not a polynomial function mod " + modulus.str());
    }
    const Integer reduced = IntPow(p, n - v);
    Integer b = Mod((delta / pv) * ModInverse(unit_part, reduced), reduced);
    for (unsigned i = 0; i < n - v; ++i) {
      const auto digit = static_cast<std::uint64_t>(b % p);
      b /= p;
      if (digit != 0) out.push_back({i, j, digit});
    }
  }
  std::sort(out.begin(), out.end(), [](const CanonicalTerm& a, const CanonicalTerm& b) {
    return BasisIndex{a.i, a.j} < BasisIndex{b.i, b.j};
  });
  return out;
}

std::vector<Integer> PointsOf(const Polynomial& f, std::uint64_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) out.push_back(f.Evaluate(x));
  return out;
}

// (p, n) of a Z_{p^n} table's ring.
std::pair<std::uint64_t, unsigned> RequirePrimePowerRing(const Ring& ring) {
  auto pp = ring.prime_power();
  if (!pp) throw InvalidArgument(ring.Descriptor() + " is not Z_{p^n}");
  return *pp;
}

std::vector<CanonicalTerm> TermsFromDigits(const std::vector<BasisIndex>& basis,
                                           std::uint64_t p, std::uint64_t index) {
  std::vector<CanonicalTerm> terms;
  for (const auto& b : basis) {
    const std::uint64_t digit = index % p;
    index /= p;
    if (digit != 0) terms.push_back({b.i, b.j, digit});
  }
  return terms;
}

std::uint64_t CheckedCount(std::uint64_t p, std::uint64_t exponent, std::uint64_t factor,
                           const Limits& limits, const std::string& what) {
  Integer total = IntPow(p, exponent) * factor;
  if (total > limits.enumeration) {
    throw SizeCapError(what + ": " + total.str() + " items exceed enumeration cap " +
                       std::to_string(limits.enumeration));
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t VpFactorial(std::uint64_t p, std::uint64_t j) {
  RequirePrime(p, "VpFactorial");
  std::uint64_t total = 0;
  for (std::uint64_t q = j / p; q > 0; q /= p) total += q;
  return total;
}

std::uint64_t Beta(std::uint64_t p, unsigned n) {
  RequirePrime(p, "Beta");
  if (n < 1) throw InvalidArgument("Beta: n must be >= 1");
  // v_p(k!) only grows at multiples of p.
  std::uint64_t k = p;
  while (VpFactorial(p, k) < n) k += p;
  return k;
}

std::uint64_t MonicNullDegree(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::kFiniteField:
      return ring.size();
    case RingKind::kModular:
    case RingKind::kPrimePower: {
      const std::uint64_t m = ring.size();
      std::uint64_t factorial = 1 % m;
      for (std::uint64_t k = 1;; ++k) {
        factorial = static_cast<std::uint64_t>((static_cast<unsigned __int128>(factorial) * k) % m);
        if (factorial == 0) return k;
      }
    }
    case RingKind::kDual:
      break;
  }
  throw InvalidArgument("MonicNullDegree: not defined for " + ring.Descriptor());
}

Polynomial FallingFactorial(std::uint64_t j) {
  Polynomial out = Polynomial::Constant(1);
  for (std::uint64_t k = 0; k < j; ++k) out *= Polynomial{-static_cast<long long>(k), 1};
  return out;
}

std::vector<BasisIndex> KernelBasis(std::uint64_t p, unsigned n) {
  if (n < 2) throw InvalidArgument("KernelBasis: n must be >= 2");
  std::vector<BasisIndex> out;
  for (std::uint64_t j = 0;; ++j) {
    const std::uint64_t v = VpFactorial(p, j);
    if (v > n - 1) break;
    out.push_back({static_cast<unsigned>(n - 1 - v), j});
  }
  return out;
}

std::vector<BasisIndex> CanonicalBasis(std::uint64_t p, unsigned n) {
  RequirePrime(p, "CanonicalBasis");
  std::vector<BasisIndex> out;
  for (std::uint64_t j = 0;; ++j) {
    const std::uint64_t v = VpFactorial(p, j);
    if (v >= n) break;
    for (unsigned i = 0; i + v < n; ++i) out.push_back({i, j});
  }
  return out;
}

Polynomial TermsToPolynomial(std::uint64_t p, const std::vector<CanonicalTerm>& terms) {
  Polynomial out;
  for (const auto& t : terms) out += Integer(t.a) * IntPow(p, t.i) * FallingFactorial(t.j);
  return out;
}

Polynomial CanonicalForm::ToPolynomial() const { return TermsToPolynomial(p, terms); }

CanonicalForm Canonicalize(const Polynomial& f, std::uint64_t p, unsigned n) {
  const std::uint64_t count = Beta(p, n);
  CanonicalForm form{p, n, FormFromPoints(PointsOf(f, count), p, n)};
  // Agreement on 0..beta(n)-1 forces agreement everywhere mod p^n.
  const Integer modulus = IntPow(p, n);
  const Polynomial g = form.ToPolynomial();
  for (std::uint64_t x = 0; x < count; ++x) {
    if (Mod(f.Evaluate(x) - g.Evaluate(x), modulus) != 0) {
      throw Error("Canonicalize: re-induction mismatch at " + std::to_string(x));
    }
  }
  return form;
}

CanonicalForm CanonicalFormOfTable(const FunctionTable& table) {
  auto [p, n] = RequirePrimePowerRing(table.ring());
  std::vector<Integer> points(table.values().begin(), table.values().end());
  CanonicalForm form{p, n, FormFromPoints(std::move(points), p, n)};
  if (!(Induce(form.ToPolynomial(), table.ring(), Limits::Unbounded()) == table)) {
    throw InvalidArgument("table is not a polynomial function on " + table.ring().Descriptor());
  }
  return form;
}

std::vector<Polynomial> EnumerateKernel(std::uint64_t p, unsigned n, const Limits& limits) {
  const auto basis = KernelBasis(p, n);
  const std::uint64_t count = CheckedCount(p, basis.size(), 1, limits, "EnumerateKernel");
  std::vector<Polynomial> out;
  out.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    out.push_back(TermsToPolynomial(p, TermsFromDigits(basis, p, index)));
  }
  return out;
}

std::vector<CanonicalForm> EnumerateCanonicalForms(std::uint64_t p, unsigned n, const Limits& limits) {
  const auto basis = CanonicalBasis(p, n);
  const std::uint64_t count = CheckedCount(p, basis.size(), 1, limits, "EnumerateCanonicalForms");
  std::vector<CanonicalForm> out;
  out.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    out.push_back({p, n, TermsFromDigits(basis, p, index)});
  }
  return out;
}

std::uint64_t UnitValuedResidueCount(std::uint64_t p) {
  RequirePrime(p, "UnitValuedResidueCount");
  return static_cast<std::uint64_t>(IntPow(p - 1, p));
}

Polynomial UnitValuedResidueRep(std::uint64_t p, std::uint64_t s) {
  const std::uint64_t count = UnitValuedResidueCount(p);
  if (s < 1 || s > count) {
    throw InvalidArgument("UnitValuedResidueRep: s must lie in [1, " + std::to_string(count) + "]");
  }
  std::vector<Elem> values(p);
  std::uint64_t rest = s - 1;
  for (std::uint64_t a = p; a-- > 0;) {
    values[a] = static_cast<Elem>(rest % (p - 1) + 1);
    rest /= (p - 1);
  }
  const Ring field = Ring::FiniteField(p);
  return ToPolynomial(field, Lagrange(FunctionTable(field, std::move(values))));
}

std::uint64_t UnitValuedResidueIndex(std::uint64_t p, const std::vector<std::uint64_t>& table) {
  if (table.size() != p) throw InvalidArgument("UnitValuedResidueIndex: need p values");
  std::uint64_t index = 0;
  for (std::uint64_t v : table) {
    if (v == 0 || v >= p) throw InvalidArgument("UnitValuedResidueIndex: table is not unit-valued");
    index = index * (p - 1) + (v - 1);
  }
  return index + 1;
}

Polynomial UVCanonicalForm::ToPolynomial() const {
  Polynomial out = residue_rep;
  for (const auto& [k, terms] : layers) out += TermsToPolynomial(p, terms);
  return out;
}

namespace {

UVCanonicalForm UvFormFromPoints(std::vector<Integer> points, std::uint64_t p, unsigned n) {
  const Integer modulus = IntPow(p, n);
  std::vector<std::uint64_t> residues(p);
  for (std::uint64_t a = 0; a < p; ++a) {
    residues[a] = static_cast<std::uint64_t>(Mod(points[a], p));
    if (residues[a] == 0) {
      throw InvalidArgument("function is not unit-valued mod " + modulus.str() + " (vanishes mod " +
                            std::to_string(p) + " at " + std::to_string(a) + ")");
    }
  }
  UVCanonicalForm form;
  form.p = p;
  form.n = n;
  form.s = UnitValuedResidueIndex(p, residues);
  form.residue_rep = UnitValuedResidueRep(p, form.s);
  for (std::size_t x = 0; x < points.size(); ++x) {
    points[x] = Mod(points[x] - form.residue_rep.Evaluate(x), modulus);
  }
  for (unsigned k = 2; k <= n; ++k) {
    const Integer level = IntPow(p, k);
    std::vector<Integer> reduced(points.size());
    for (std::size_t x = 0; x < points.size(); ++x) reduced[x] = Mod(points[x], level);
    auto terms = FormFromPoints(std::move(reduced), p, k);
    for (const auto& t : terms) {
      if (t.i + VpFactorial(p, t.j) != k - 1) {
        throw Error("UvpfCanonicalize: layer " + std::to_string(k) + " left the kernel basis");
      }
    }
    const Polynomial layer = TermsToPolynomial(p, terms);
    for (std::size_t x = 0; x < points.size(); ++x) {
      points[x] = Mod(points[x] - layer.Evaluate(x), modulus);
    }
    form.layers[k] = std::move(terms);
  }
  for (const auto& v : points) {
    if (v != 0) throw Error("UvpfCanonicalize: residual does not vanish");
  }
  return form;
}

}  // namespace

UVCanonicalForm UvpfCanonicalize(const Polynomial& f, std::uint64_t p, unsigned n) {
  RequirePrime(p, "UvpfCanonicalize");
  return UvFormFromPoints(PointsOf(f, Beta(p, n)), p, n);
}

UVCanonicalForm UvpfCanonicalFormOfTable(const FunctionTable& table) {
  auto [p, n] = RequirePrimePowerRing(table.ring());
  CanonicalFormOfTable(table);  // rejects non-polynomial tables
  std::vector<Integer> points(table.values().begin(), table.values().end());
  return UvFormFromPoints(std::move(points), p, n);
}

std::vector<UVCanonicalForm> EnumerateUvpfForms(std::uint64_t p, unsigned n, const Limits& limits) {
  RequirePrime(p, "EnumerateUvpfForms");
  if (n < 1) throw InvalidArgument("EnumerateUvpfForms: n must be >= 1");
  std::vector<std::pair<unsigned, std::vector<BasisIndex>>> bases;
  std::uint64_t positions = 0;
  for (unsigned k = 2; k <= n; ++k) {
    bases.emplace_back(k, KernelBasis(p, k));
    positions += bases.back().second.size();
  }
  const std::uint64_t residues = UnitValuedResidueCount(p);
  const std::uint64_t per_residue = CheckedCount(p, positions, 1, limits, "EnumerateUvpfForms");
  CheckedCount(p, positions, residues, limits, "EnumerateUvpfForms");

  std::vector<UVCanonicalForm> out;
  out.reserve(per_residue * residues);
  for (std::uint64_t s = 1; s <= residues; ++s) {
    const Polynomial rep = UnitValuedResidueRep(p, s);
    for (std::uint64_t index = 0; index < per_residue; ++index) {
      UVCanonicalForm form{p, n, s, rep, {}};
      std::uint64_t rest = index;
      for (const auto& [k, basis] : bases) {
        form.layers[k] = TermsFromDigits(basis, p, rest);
        for (std::size_t t = 0; t < basis.size(); ++t) rest /= p;
      }
      out.push_back(std::move(form));
    }
  }
  return out;
}

Integer KernelSize(std::uint64_t p, unsigned n) { return IntPow(p, Beta(p, n)); }

Integer CountPolyFun(std::uint64_t p, unsigned n) {
  if (n < 1) throw InvalidArgument("CountPolyFun: n must be >= 1");
  std::uint64_t exponent = 0;
  for (unsigned k = 1; k <= n; ++k) exponent += Beta(p, k);
  return IntPow(p, exponent);
}

Integer CountUvpf(std::uint64_t p, unsigned n) {
  if (n < 1) throw InvalidArgument("CountUvpf: n must be >= 1");
  RequirePrime(p, "CountUvpf");
  std::uint64_t exponent = 0;
  for (unsigned k = 2; k <= n; ++k) exponent += Beta(p, k);
  return IntPow(p - 1, p) * IntPow(p, exponent);
}

namespace {

Integer CountDistinctTables(std::uint64_t p, unsigned n, bool unit_valued_only, const Limits& limits) {
  const Ring ring = Ring::PrimePower(p, n);
  limits.RequireRingSize(ring.size(), "brute-force count");
  const auto length = static_cast<unsigned>(Beta(p, n));
  const std::uint64_t count = CandidateCount(ring, length, limits.enumeration, "brute-force count");
  const Elem size = static_cast<Elem>(ring.size());

  using TableSet = std::unordered_set<std::vector<Elem>, TableHash>;
  std::vector<TableSet> partial(std::max(1u, limits.jobs));
  internal::ParallelChunks(count, limits.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<Elem> coeffs = RingPolyCoefficients(ring, length, begin);
    std::vector<Elem> values(size);
    for (std::uint64_t index = begin; index < end; ++index) {
      bool keep = true;
      for (Elem x = 0; x < size; ++x) {
        std::uint64_t acc = 0;
        for (unsigned k = length; k-- > 0;) acc = (acc * x + coeffs[k]) % size;
        values[x] = static_cast<Elem>(acc);
        if (unit_valued_only && acc % p == 0) {
          keep = false;
          break;
        }
      }
      if (keep) partial[w].insert(values);
      for (unsigned k = 0; k < length && ++coeffs[k] == size; ++k) coeffs[k] = 0;
    }
  });
  TableSet all = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w) all.insert(partial[w].begin(), partial[w].end());
  return Integer(all.size());
}

}  // namespace

Integer CountPolyFunBruteForce(std::uint64_t p, unsigned n, const Limits& limits) {
  return CountDistinctTables(p, n, false, limits);
}

Integer CountUvpfBruteForce(std::uint64_t p, unsigned n, const Limits& limits) {
  return CountDistinctTables(p, n, true, limits);
}

nlohmann::json ToJson(const CanonicalForm& form) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : form.terms) terms.push_back({t.i, t.j, t.a});
  return {{"p", form.p}, {"n", form.n}, {"terms", terms}};
}

nlohmann::json ToJson(const UVCanonicalForm& form) {
  nlohmann::json layers = nlohmann::json::object();
  for (const auto& [k, terms] : form.layers) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& t : terms) list.push_back({t.i, t.j, t.a});
    layers[std::to_string(k)] = list;
  }
  return {{"p", form.p}, {"n", form.n}, {"s", form.s},
          {"residue_rep", ToJson(form.residue_rep)}, {"layers", layers}};
}

}  // namespace ringfunc
