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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ringfunc/funcspace.h"
#include "ringfunc/limits.h"
#include "ringfunc/poly.h"
#include "ringfunc/ring.h"
#include "ringfunc/ring_poly.h"

namespace ringfunc {

// (G, F) in P(R) x| F(R)^x: G a polynomial permutation, F unit-valued.
struct SemidirectElement {
  FunctionTable g;
  FunctionTable f;

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

// (F)theta_G = F o G. Right action: theta_{G1 o G2} = theta_{G2} after theta_{G1}.
FunctionTable ThetaApply(const FunctionTable& f, const FunctionTable& g);

SemidirectElement SemidirectIdentity(const Ring& ring, const Limits& limits = {});
// (G1, F1)(G2, F2) = (G1 o G2, (F1 o G2) . F2).
SemidirectElement SemidirectMul(const SemidirectElement& x, const SemidirectElement& y);
// (G^-1, F^-1 o G^-1).
SemidirectElement SemidirectInv(const SemidirectElement& x);

// phi([f]_{R[al]}) = ([f]_R, [f']_R). Throws InvalidArgument unless f
// permutes R[al].
SemidirectElement EmbedPhi(const RingPoly& f, const Ring& base, const Limits& limits = {});
SemidirectElement EmbedPhi(const Polynomial& f, const Ring& base, const Limits& limits = {});

// The table of a + b al -> G(a) + b F(a) al on R[al], which is what a
// base-coefficient polynomial f with ([f], [f']) = (G, F) induces.
FunctionTable DualTableFromPair(const Ring& dual, const FunctionTable& g, const FunctionTable& f);

// Reads (G, F) back from such a table: G(a) is the real part at (a, 0) and
// F(a) the al-part at (a, 1).
SemidirectElement PairOfDualTable(const FunctionTable& table);

// A permutation of R[al] induced by a polynomial with coefficients in R.
struct DualPermutation {
  FunctionTable table;  // over the dual ring
  RingPoly witness;     // base coefficients
  SemidirectElement key;  // ([witness]_R, [witness']_R)
};

// x + g(x) with g null on R; fixes every (r, 0).
struct StabilizerElement {
  RingPoly null_part;
  FunctionTable table;  // over the dual ring
};

// Degree bound D for enumerating base-coefficient polynomials that reach
// every polynomial function on R[al]: 2q for fields; for other rings the
// pinned value when known, else the empirical stabilization point.
unsigned DualEnumerationDegree(const Ring& base, const Limits& limits = {});

// Smallest d such that candidates of degree < d, d + 1 and d + 2 induce the
// same number of permutations of R[al].
unsigned EstablishDualDegreeBound(const Ring& base, const Limits& limits = {});

// Distinct permutations of R[al] from degree < DualEnumerationDegree(base),
// sorted by key. The witness is the first candidate in enumeration order.
std::vector<DualPermutation> EnumerateDualPerms(const Ring& base, const Limits& limits = {});
std::vector<DualPermutation> EnumerateDualPerms(const Ring& base, unsigned degree_bound,
                                                const Limits& limits = {});

// St(R), one element per distinct [1 + g']_R, sorted by that table.
std::vector<StabilizerElement> EnumerateStabilizer(const Ring& base, const Limits& limits = {});

// [1 + g']_R.
FunctionTable StabToUvpf(const StabilizerElement& e, const Ring& base);

// Polynomial functions on R (from degree < MonicNullDegree), sorted.
std::vector<FunctionTable> EnumeratePolynomialFunctions(const Ring& base, const Limits& limits = {});
// P(R): the bijective ones.
std::vector<FunctionTable> EnumeratePolynomialPermutations(const Ring& base, const Limits& limits = {});
// F(R)^x: the unit-valued ones.
std::vector<FunctionTable> EnumerateUnitValuedFunctions(const Ring& base, const Limits& limits = {});
// All of P(R) x| F(R)^x.
std::vector<SemidirectElement> SemidirectProductElements(const Ring& base, const Limits& limits = {});

struct GroupReport {
  std::size_t order = 0;
  bool closure = true;
  bool identity = true;
  bool inverses = true;
  bool associativity = true;
  bool associativity_exhaustive = true;
  std::uint64_t triples_checked = 0;
  bool abelian = true;
  std::vector<std::string> violations;

  bool passed() const { return closure && identity && inverses && associativity; }
};

// Closure, identity and inverses exhaustively; associativity over all
// triples up to order 64, else 10,000 seeded random triples.
GroupReport VerifyGroupAxioms(const std::vector<SemidirectElement>& elements);
GroupReport VerifyGroupAxioms(const std::vector<DualPermutation>& elements);
GroupReport VerifyGroupAxioms(const std::vector<StabilizerElement>& elements);

struct EmbeddingReport {
  std::string ring;
  std::size_t dual_perms = 0;        // |P_R(R[al])|
  std::size_t perms = 0;             // |P(R)|
  std::size_t unit_valued = 0;       // |F(R)^x|
  std::size_t stabilizer = 0;        // |St(R)|
  Integer semidirect_order = 0;      // |P(R)| |F(R)^x|
  std::size_t image = 0;             // |phi(P_R(R[al]))|
  bool witnesses_consistent = true;  // stored tables match the pair law
  bool injective = true;
  bool homomorphism = true;
  bool homomorphism_exhaustive = true;
  std::uint64_t pairs_checked = 0;
  bool surjective = false;
  std::vector<std::string> violations;
};

EmbeddingReport VerifyEmbedding(const Ring& base, const Limits& limits = {});

// Group export: element list (pair key + witness) and, optionally, the
// multiplication table as element indices.
nlohmann::json DualPermsToJson(const Ring& base, const std::vector<DualPermutation>& elements,
                               bool with_table);
nlohmann::json StabilizerToJson(const Ring& base, const std::vector<StabilizerElement>& elements,
                                bool with_table);
// Row i, column j holds the index of e_i o e_j. Throws if the set is not
// closed under composition.
std::vector<std::vector<std::size_t>> MultiplicationTable(const std::vector<FunctionTable>& elements);
// The same matrix as comma-separated rows.
std::string MultiplicationTableCsv(const std::vector<FunctionTable>& elements);

}  // namespace ringfunc
