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
#include <map>
#include <vector>

#include "json.hpp"
#include "ringfunc/funcspace.h"
#include "ringfunc/limits.h"
#include "ringfunc/poly.h"
#include "ringfunc/ring.h"

namespace ringfunc {

// Legendre: v_p(j!) = sum_{i>=1} floor(j / p^i).
std::uint64_t VpFactorial(std::uint64_t p, std::uint64_t j);

// Smallest k >= 1 with p^n | k!.
std::uint64_t Beta(std::uint64_t p, unsigned n);

// Smallest degree of a monic null polynomial on `ring`: q for F_q, and the
// smallest k with m | k! for Z_m (the polynomial (x)_k). Every polynomial
// function on the ring is induced by a polynomial of lower degree.
std::uint64_t MonicNullDegree(const Ring& ring);

// (x)_j = x(x-1)...(x-j+1), (x)_0 = 1.
Polynomial FallingFactorial(std::uint64_t j);

// The basis term p^i (x)_j.
struct BasisIndex {
  unsigned i = 0;
  std::uint64_t j = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  // Ordered by (j, i).
  friend auto operator<=>(const BasisIndex& a, const BasisIndex& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

// All (i, j) with i + v_p(j!) = n - 1, sorted by (j, i). Spans the kernel of
// reduction F(Z_{p^n}) -> F(Z_{p^{n-1}}). Requires n >= 2.
std::vector<BasisIndex> KernelBasis(std::uint64_t p, unsigned n);

// All (i, j) with i + v_p(j!) < n, sorted by (j, i).
std::vector<BasisIndex> CanonicalBasis(std::uint64_t p, unsigned n);

struct CanonicalTerm {
  unsigned i = 0;
  std::uint64_t j = 0;
  std::uint64_t a = 0;  // in [1, p-1]; zero terms are omitted

  friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
};

// sum a_ij p^i (x)_j over terms; uniquely determines a function mod p^n.
struct CanonicalForm {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<CanonicalTerm> terms;  // sorted by (j, i)

  Polynomial ToPolynomial() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

Polynomial TermsToPolynomial(std::uint64_t p, const std::vector<CanonicalTerm>& terms);

// Unique canonical form of [f] mod p^n. Works from f(0), ..., f(beta(n)-1)
// only, so p^n need not be enumerable.
CanonicalForm Canonicalize(const Polynomial& f, std::uint64_t p, unsigned n);

// Canonical form of a table over Z_{p^n}; throws InvalidArgument if the
// table is not a polynomial function.
CanonicalForm CanonicalFormOfTable(const FunctionTable& table);

// Kernel elements sum a_ij p^i (x)_j over KernelBasis(p, n), with the
// coefficient of the first basis term varying fastest.
std::vector<Polynomial> EnumerateKernel(std::uint64_t p, unsigned n, const Limits& limits = {});

// Every canonical form mod p^n (all p^{sum beta(k)} of them).
std::vector<CanonicalForm> EnumerateCanonicalForms(std::uint64_t p, unsigned n,
                                                   const Limits& limits = {});

// (p-1)^p, the number of unit-valued functions on Z_p.
std::uint64_t UnitValuedResidueCount(std::uint64_t p);

// l_s: the degree <= p-1 Lagrange representative of the s-th unit-valued
// table on Z_p, tables ordered lexicographically with the value at 0 most
// significant; s is 1-based.
Polynomial UnitValuedResidueRep(std::uint64_t p, std::uint64_t s);

// Index s of a unit-valued table on Z_p (values at 0..p-1, all nonzero).
std::uint64_t UnitValuedResidueIndex(std::uint64_t p, const std::vector<std::uint64_t>& table);

// l_s + sum_{k=2}^{n} sum_{i + v_p(j!) = k-1} a_kij p^i (x)_j.
struct UVCanonicalForm {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t s = 0;
  Polynomial residue_rep;  // l_s
  std::map<unsigned, std::vector<CanonicalTerm>> layers;  // keys 2..n, all present

  Polynomial ToPolynomial() const;
  friend bool operator==(const UVCanonicalForm&, const UVCanonicalForm&) = default;
};

// Throws InvalidArgument if f is not unit-valued mod p^n.
UVCanonicalForm UvpfCanonicalize(const Polynomial& f, std::uint64_t p, unsigned n);
UVCanonicalForm UvpfCanonicalFormOfTable(const FunctionTable& table);

// s-major; within one s, the concatenated layer coefficients count in base
// p with the first basis term of layer 2 varying fastest.
std::vector<UVCanonicalForm> EnumerateUvpfForms(std::uint64_t p, unsigned n,
                                                const Limits& limits = {});

// p^{beta(n)}.
Integer KernelSize(std::uint64_t p, unsigned n);
// p^{sum_{k=1}^{n} beta(k)}.
Integer CountPolyFun(std::uint64_t p, unsigned n);
// (p-1)^p p^{sum_{k=2}^{n} beta(k)}.
Integer CountUvpf(std::uint64_t p, unsigned n);

// Distinct tables induced mod p^n by every polynomial of degree < beta(n)
// with coefficients in [0, p^n - 1].
Integer CountPolyFunBruteForce(std::uint64_t p, unsigned n, const Limits& limits = {});
Integer CountUvpfBruteForce(std::uint64_t p, unsigned n, const Limits& limits = {});

nlohmann::json ToJson(const CanonicalForm& form);
nlohmann::json ToJson(const UVCanonicalForm& form);

}  // namespace ringfunc
