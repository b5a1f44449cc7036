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

#include "ringfunc/groups.h"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "parallel.h"
#include "ringfunc/canonical.h"
#include "ringfunc/dual.h"

namespace ringfunc {

namespace {

constexpr std::size_t kExhaustiveTripleOrder = 64;
constexpr std::uint64_t kRandomTriples = 10'000;
constexpr std::uint64_t kExhaustivePairLimit = 4'000'000;
constexpr std::uint64_t kRandomPairs = 100'000;
constexpr std::uint64_t kSeed = 20260917;
constexpr std::size_t kMaxViolations = 16;

// Empirically established bounds for non-field bases; see
// EstablishDualDegreeBound and the regression test that recomputes them.
const std::map<std::uint64_t, unsigned>& PinnedDualDegrees() {
  static const std::map<std::uint64_t, unsigned> pinned = {
      {4, 4},
  };
  return pinned;
}

void Note(std::vector<std::string>& violations, std::string message) {
  if (violations.size() < kMaxViolations) violations.push_back(std::move(message));
}

std::vector<Elem> Concat(const FunctionTable& a, const FunctionTable& b) {
  std::vector<Elem> out = a.values();
  out.insert(out.end(), b.values().begin(), b.values().end());
  return out;
}

std::vector<Elem> KeyOf(const SemidirectElement& e) { return Concat(e.g, e.f); }
std::vector<Elem> KeyOf(const FunctionTable& t) { return t.values(); }

// Values and derivative values of a coefficient vector on every base element.
void PairValues(const Ring& ring, const std::vector<Elem>& coeffs, std::vector<Elem>& values,
                std::vector<Elem>& slopes) {
  const Elem size = static_cast<Elem>(ring.size());
  const std::size_t len = coeffs.size();
  std::vector<Elem> derivative(len > 0 ? len - 1 : 0);
  for (std::size_t k = 1; k < len; ++k) {
    derivative[k - 1] = ring.Mul(ring.FromInt(static_cast<std::int64_t>(k)), coeffs[k]);
  }
  for (Elem a = 0; a < size; ++a) {
    Elem acc = 0;
    for (std::size_t k = len; k-- > 0;) acc = ring.Add(ring.Mul(acc, a), coeffs[k]);
    values[a] = acc;
    acc = 0;
    for (std::size_t k = derivative.size(); k-- > 0;) acc = ring.Add(ring.Mul(acc, a), derivative[k]);
    slopes[a] = acc;
  }
}

// Table on R[al] of the base-coefficient polynomial `f`, by Horner in R[al].
FunctionTable DualTableOf(const Ring& dual, const RingPoly& f) {
  return Induce(LiftToDual(dual, {f, RingPoly{}}), dual, Limits::Unbounded());
}

template <typename T, typename Mul, typename Inv>
GroupReport VerifyCore(const std::vector<T>& elements, const T& identity, Mul mul, Inv inv) {
  GroupReport report;
  report.order = elements.size();
  const std::size_t n = elements.size();
  if (n == 0) {
    report.identity = false;
    Note(report.violations, "empty element set");
    return report;
  }
  std::unordered_map<std::vector<Elem>, std::uint32_t, TableHash> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(KeyOf(elements[i]), static_cast<std::uint32_t>(i)).second) {
      Note(report.violations, "duplicate element at index " + std::to_string(i));
    }
  }
  auto find = [&](const T& x) -> std::optional<std::uint32_t> {
    auto it = index.find(KeyOf(x));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  const auto identity_index = find(identity);
  if (!identity_index) {
    report.identity = false;
    Note(report.violations, "identity is not in the set");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mul(identity, elements[i]) == elements[i]) || !(mul(elements[i], identity) == elements[i])) {
      report.identity = false;
      Note(report.violations, "identity law fails at index " + std::to_string(i));
    }
    const T x_inv = inv(elements[i]);
    if (!find(x_inv) || !(mul(elements[i], x_inv) == identity) || !(mul(x_inv, elements[i]) == identity)) {
      report.inverses = false;
      Note(report.violations, "inverse fails at index " + std::to_string(i));
    }
  }

  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const bool exhaustive_pairs = std::uint64_t{n} * n <= kExhaustivePairLimit;
  std::vector<std::uint32_t> product;
  constexpr std::uint32_t kMissing = 0xffffffffu;
  if (exhaustive_pairs) {
    product.assign(n * n, kMissing);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (auto k = find(mul(elements[i], elements[j]))) {
          product[i * n + j] = *k;
        } else {
          report.closure = false;
          Note(report.violations, "product of " + std::to_string(i) + " and " + std::to_string(j) +
                                      " leaves the set");
        }
      }
    }
    for (std::size_t i = 0; i < n && report.abelian; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (product[i * n + j] != product[j * n + i]) {
          report.abelian = false;
          break;
        }
      }
    }
  } else {
    for (std::uint64_t t = 0; t < kRandomPairs; ++t) {
      const std::size_t i = pick(rng), j = pick(rng);
      const T ij = mul(elements[i], elements[j]);
      if (!find(ij)) {
        report.closure = false;
        Note(report.violations, "product of " + std::to_string(i) + " and " + std::to_string(j) +
                                    " leaves the set");
      }
      if (report.abelian && !(ij == mul(elements[j], elements[i]))) report.abelian = false;
    }
  }

  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++report.triples_checked;
    bool ok;
    if (exhaustive_pairs && report.closure) {
      ok = product[product[i * n + j] * n + k] == product[i * n + product[j * n + k]];
    } else {
      ok = mul(mul(elements[i], elements[j]), elements[k]) ==
           mul(elements[i], mul(elements[j], elements[k]));
    }
    if (!ok) {
      report.associativity = false;
      Note(report.violations, "associativity fails at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ", " + std::to_string(k) + ")");
    }
  };
  if (n <= kExhaustiveTripleOrder) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) check_triple(i, j, k);
      }
    }
  } else {
    report.associativity_exhaustive = false;
    for (std::uint64_t t = 0; t < kRandomTriples; ++t) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      check_triple(i, j, k);
    }
  }
  return report;
}

GroupReport VerifyTableGroup(const std::vector<FunctionTable>& tables) {
  auto compose = [](const FunctionTable& a, const FunctionTable& b) { return Compose(a, b); };
  if (tables.empty()) {
    return VerifyCore<FunctionTable>({}, FunctionTable(Ring::Modular(2), {0, 1}), compose, InverseBijection);
  }
  const FunctionTable identity = FunctionTable::Identity(tables.front().ring(), Limits::Unbounded());
  return VerifyCore(tables, identity, compose, InverseBijection);
}

std::vector<FunctionTable> DistinctTables(const Ring& base, unsigned length, const Limits& limits,
                                          const std::string& what) {
  limits.RequireRingSize(base.size(), what);
  const std::uint64_t count = CandidateCount(base, length, limits.enumeration, what);
  std::unordered_set<std::vector<Elem>, TableHash> seen;
  std::vector<Elem> coeffs(length, 0);
  for (std::uint64_t index = 0; index < count; ++index) {
    std::vector<Elem> values(base.size());
    for (Elem a = 0; a < values.size(); ++a) values[a] = Evaluate(base, RingPoly(coeffs), a);
    seen.insert(std::move(values));
    for (unsigned k = 0; k < length && ++coeffs[k] == base.size(); ++k) coeffs[k] = 0;
  }
  std::vector<std::vector<Elem>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<FunctionTable> out;
  out.reserve(sorted.size());
  for (auto& v : sorted) out.emplace_back(base, std::move(v));
  return out;
}

}  // namespace

FunctionTable ThetaApply(const FunctionTable& f, const FunctionTable& g) {
  if (!g.IsBijective()) throw InvalidArgument("ThetaApply: G is not a bijection");
  if (!f.IsUnitValued()) throw InvalidArgument("ThetaApply: F is not unit-valued");
  return Compose(f, g);
}

SemidirectElement SemidirectIdentity(const Ring& ring, const Limits& limits) {
  return {FunctionTable::Identity(ring, limits), FunctionTable::Constant(ring, ring.one(), limits)};
}

SemidirectElement SemidirectMul(const SemidirectElement& x, const SemidirectElement& y) {
  if (!(x.g.ring() == y.g.ring())) throw InvalidArgument("SemidirectMul: ring mismatch");
  return {Compose(x.g, y.g), Pointwise(PointwiseOp::kMul, Compose(x.f, y.g), y.f)};
}

SemidirectElement SemidirectInv(const SemidirectElement& x) {
  FunctionTable g_inv = InverseBijection(x.g);
  FunctionTable f_inv = Compose(InvertUnitTable(x.f), g_inv);
  return {std::move(g_inv), std::move(f_inv)};
}

SemidirectElement EmbedPhi(const RingPoly& f, const Ring& base, const Limits& limits) {
  if (!IsPermBruteForce(f, DualRing(base, limits), limits)) {
    throw InvalidArgument("EmbedPhi: " + Format(base, f) + " does not permute " +
                          DualRing(base, limits).Descriptor());
  }
  return {Induce(f, base, limits), Induce(Derive(base, f), base, limits)};
}

SemidirectElement EmbedPhi(const Polynomial& f, const Ring& base, const Limits& limits) {
  return EmbedPhi(RingPoly::From(base, f), base, limits);
}

FunctionTable DualTableFromPair(const Ring& dual, const FunctionTable& g, const FunctionTable& f) {
  const Ring& base = dual.base();
  std::vector<Elem> values(dual.size());
  for (Elem e = 0; e < values.size(); ++e) {
    const Elem a = dual.RealPart(e), b = dual.EpsPart(e);
    values[e] = dual.MakeDual(g(a), base.Mul(b, f(a)));
  }
  return FunctionTable(dual, std::move(values));
}

SemidirectElement PairOfDualTable(const FunctionTable& table) {
  const Ring& dual = table.ring();
  const Ring& base = dual.base();
  std::vector<Elem> g(base.size()), f(base.size());
  for (Elem a = 0; a < base.size(); ++a) {
    g[a] = dual.RealPart(table(dual.MakeDual(a, 0)));
    f[a] = dual.EpsPart(table(dual.MakeDual(a, 1)));
  }
  return {FunctionTable(base, std::move(g)), FunctionTable(base, std::move(f))};
}

std::vector<DualPermutation> EnumerateDualPerms(const Ring& base, unsigned degree_bound,
                                                const Limits& limits) {
  const Ring dual = DualRing(base, limits);
  const std::uint64_t count = CandidateCount(base, degree_bound, limits.enumeration,
                                             "EnumerateDualPerms(" + base.Descriptor() + ")");
  const std::size_t size = base.size();

  // First candidate index per distinct pair ([f], [f']).
  using FirstIndex = std::unordered_map<std::vector<Elem>, std::uint64_t, TableHash>;
  std::vector<FirstIndex> partial(std::max(1u, limits.jobs));
  internal::ParallelChunks(count, limits.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<Elem> coeffs = RingPolyCoefficients(base, degree_bound, begin);
    std::vector<Elem> values(size), slopes(size), key(2 * size);
    for (std::uint64_t index = begin; index < end; ++index) {
      PairValues(base, coeffs, values, slopes);
      std::copy(values.begin(), values.end(), key.begin());
      std::copy(slopes.begin(), slopes.end(), key.begin() + size);
      partial[w].emplace(key, index);
      for (unsigned k = 0; k < degree_bound && ++coeffs[k] == size; ++k) coeffs[k] = 0;
    }
  });
  FirstIndex first = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w) {
    for (auto& [key, index] : partial[w]) {
      auto [it, inserted] = first.emplace(key, index);
      if (!inserted) it->second = std::min(it->second, index);
    }
  }

  std::vector<std::pair<std::vector<Elem>, std::uint64_t>> sorted(first.begin(), first.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<DualPermutation> out;
  for (auto& [key, index] : sorted) {
    RingPoly witness(RingPolyCoefficients(base, degree_bound, index));
    FunctionTable table = DualTableOf(dual, witness);
    if (!table.IsBijective()) continue;
    std::vector<Elem> g(key.begin(), key.begin() + size), f(key.begin() + size, key.end());
    out.push_back({std::move(table), std::move(witness),
                   {FunctionTable(base, std::move(g)), FunctionTable(base, std::move(f))}});
  }
  return out;
}

unsigned EstablishDualDegreeBound(const Ring& base, const Limits& limits) {
  std::vector<std::size_t> counts;
  for (unsigned d = 1;; ++d) {
    counts.push_back(EnumerateDualPerms(base, d, limits).size());
    const std::size_t m = counts.size();
    if (m >= 3 && counts[m - 3] > 0 && counts[m - 3] == counts[m - 2] && counts[m - 2] == counts[m - 1]) {
      return d - 2;
    }
  }
}

unsigned DualEnumerationDegree(const Ring& base, const Limits& limits) {
  if (base.is_dual()) throw InvalidArgument("DualEnumerationDegree expects the base ring");
  if (base.is_field()) return static_cast<unsigned>(2 * base.size());
  if (base.kind() != RingKind::kFiniteField) {
    const auto& pinned = PinnedDualDegrees();
    if (auto it = pinned.find(base.size()); it != pinned.end()) return it->second;
  }
  return EstablishDualDegreeBound(base, limits);
}

std::vector<DualPermutation> EnumerateDualPerms(const Ring& base, const Limits& limits) {
  return EnumerateDualPerms(base, DualEnumerationDegree(base, limits), limits);
}

std::vector<StabilizerElement> EnumerateStabilizer(const Ring& base, const Limits& limits) {
  const Ring dual = DualRing(base, limits);
  const unsigned length = DualEnumerationDegree(base, limits);
  const std::uint64_t count = CandidateCount(base, length, limits.enumeration,
                                             "EnumerateStabilizer(" + base.Descriptor() + ")");
  const std::size_t size = base.size();
  std::map<std::vector<Elem>, std::uint64_t> first;  // [1 + g'] -> first index
  std::vector<Elem> coeffs(length, 0), values(size), slopes(size);
  for (std::uint64_t index = 0; index < count; ++index) {
    PairValues(base, coeffs, values, slopes);
    if (std::all_of(values.begin(), values.end(), [](Elem v) { return v == 0; })) {
      for (auto& s : slopes) s = base.Add(base.one(), s);
      // x + g permutes R[al] only when 1 + g' is unit-valued.
      if (std::all_of(slopes.begin(), slopes.end(), [&](Elem s) { return base.IsUnit(s); })) {
        first.emplace(slopes, index);
      }
    }
    for (unsigned k = 0; k < length && ++coeffs[k] == size; ++k) coeffs[k] = 0;
  }
  std::vector<StabilizerElement> out;
  for (const auto& [key, index] : first) {
    RingPoly g(RingPolyCoefficients(base, length, index));
    RingPoly shifted = Add(base, RingPoly({0, base.one()}), g);
    out.push_back({g, DualTableOf(dual, shifted)});
  }
  return out;
}

FunctionTable StabToUvpf(const StabilizerElement& e, const Ring& base) {
  return Induce(Add(base, RingPoly({base.one()}), Derive(base, e.null_part)), base,
                Limits::Unbounded());
}

std::vector<FunctionTable> EnumeratePolynomialFunctions(const Ring& base, const Limits& limits) {
  return DistinctTables(base, static_cast<unsigned>(MonicNullDegree(base)), limits,
                        "EnumeratePolynomialFunctions(" + base.Descriptor() + ")");
}

std::vector<FunctionTable> EnumeratePolynomialPermutations(const Ring& base, const Limits& limits) {
  std::vector<FunctionTable> out;
  for (auto& t : EnumeratePolynomialFunctions(base, limits)) {
    if (t.IsBijective()) out.push_back(std::move(t));
  }
  return out;
}

std::vector<FunctionTable> EnumerateUnitValuedFunctions(const Ring& base, const Limits& limits) {
  std::vector<FunctionTable> out;
  for (auto& t : EnumeratePolynomialFunctions(base, limits)) {
    if (t.IsUnitValued()) out.push_back(std::move(t));
  }
  return out;
}

std::vector<SemidirectElement> SemidirectProductElements(const Ring& base, const Limits& limits) {
  const auto perms = EnumeratePolynomialPermutations(base, limits);
  const auto units = EnumerateUnitValuedFunctions(base, limits);
  limits.RequireEnumeration(std::uint64_t{perms.size()} * units.size(), "SemidirectProductElements");
  std::vector<SemidirectElement> out;
  out.reserve(perms.size() * units.size());
  for (const auto& g : perms) {
    for (const auto& f : units) out.push_back({g, f});
  }
  return out;
}

GroupReport VerifyGroupAxioms(const std::vector<SemidirectElement>& elements) {
  if (elements.empty()) {
    GroupReport report;
    report.identity = false;
    report.violations.push_back("empty element set");
    return report;
  }
  const SemidirectElement identity = SemidirectIdentity(elements.front().g.ring(), Limits::Unbounded());
  return VerifyCore(elements, identity, SemidirectMul, SemidirectInv);
}

GroupReport VerifyGroupAxioms(const std::vector<DualPermutation>& elements) {
  std::vector<FunctionTable> tables;
  for (const auto& e : elements) tables.push_back(e.table);
  return VerifyTableGroup(tables);
}

GroupReport VerifyGroupAxioms(const std::vector<StabilizerElement>& elements) {
  std::vector<FunctionTable> tables;
  for (const auto& e : elements) tables.push_back(e.table);
  return VerifyTableGroup(tables);
}

EmbeddingReport VerifyEmbedding(const Ring& base, const Limits& limits) {
  EmbeddingReport report;
  report.ring = base.Descriptor();
  const Ring dual = DualRing(base, limits);
  const auto elements = EnumerateDualPerms(base, limits);
  const std::size_t n = elements.size();
  report.dual_perms = n;

  std::unordered_map<std::vector<Elem>, std::uint32_t, TableHash> by_table;
  std::unordered_set<std::vector<Elem>, TableHash> images;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = elements[i];
    if (!(DualTableFromPair(dual, e.key.g, e.key.f) == e.table) || !(PairOfDualTable(e.table) == e.key)) {
      report.witnesses_consistent = false;
      Note(report.violations, "pair law fails for witness " + Format(base, e.witness));
    }
    by_table.emplace(e.table.values(), static_cast<std::uint32_t>(i));
    images.insert(KeyOf(e.key));
  }
  report.image = images.size();
  report.injective = images.size() == n && by_table.size() == n;
  if (!report.injective) Note(report.violations, "phi is not injective");

  auto check_pair = [&](std::size_t i, std::size_t j) {
    ++report.pairs_checked;
    const FunctionTable composite = Compose(elements[i].table, elements[j].table);
    auto it = by_table.find(composite.values());
    if (it == by_table.end()) {
      report.homomorphism = false;
      Note(report.violations, "composite of " + std::to_string(i) + " and " + std::to_string(j) +
                                  " is not in the enumeration");
      return;
    }
    if (!(elements[it->second].key == SemidirectMul(elements[i].key, elements[j].key))) {
      report.homomorphism = false;
      Note(report.violations, "phi(T" + std::to_string(i) + " o T" + std::to_string(j) +
                                  ") != phi(T" + std::to_string(i) + ") phi(T" + std::to_string(j) + ")");
    }
  };
  if (std::uint64_t{n} * n <= kExhaustivePairLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) check_pair(i, j);
    }
  } else if (n > 0) {
    report.homomorphism_exhaustive = false;
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t t = 0; t < kRandomTriples; ++t) check_pair(pick(rng), pick(rng));
  }

  report.perms = EnumeratePolynomialPermutations(base, limits).size();
  report.unit_valued = EnumerateUnitValuedFunctions(base, limits).size();
  report.stabilizer = EnumerateStabilizer(base, limits).size();
  report.semidirect_order = Integer(report.perms) * report.unit_valued;
  report.surjective = report.injective && Integer(report.image) == report.semidirect_order;
  return report;
}

nlohmann::json DualPermsToJson(const Ring& base, const std::vector<DualPermutation>& elements,
                               bool with_table) {
  nlohmann::json list = nlohmann::json::array();
  std::vector<FunctionTable> tables;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    list.push_back({{"index", i},
                    {"g", e.key.g.values()},
                    {"f", e.key.f.values()},
                    {"witness", ToJson(e.witness)},
                    {"witness_text", Format(base, e.witness)}});
    tables.push_back(e.table);
  }
  nlohmann::json out = {{"ring", base.Descriptor()},
                        {"dual_ring", "dual:" + base.Descriptor()},
                        {"order", elements.size()},
                        {"elements", list}};
  if (with_table) out["table"] = MultiplicationTable(tables);
  return out;
}

nlohmann::json StabilizerToJson(const Ring& base, const std::vector<StabilizerElement>& elements,
                                bool with_table) {
  nlohmann::json list = nlohmann::json::array();
  std::vector<FunctionTable> tables;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    list.push_back({{"index", i},
                    {"null_part", ToJson(e.null_part)},
                    {"null_part_text", Format(base, e.null_part)},
                    {"uvpf", StabToUvpf(e, base).values()}});
    tables.push_back(e.table);
  }
  nlohmann::json out = {{"ring", base.Descriptor()}, {"order", elements.size()}, {"elements", list}};
  if (with_table) out["table"] = MultiplicationTable(tables);
  return out;
}

std::vector<std::vector<std::size_t>> MultiplicationTable(const std::vector<FunctionTable>& elements) {
  std::unordered_map<std::vector<Elem>, std::size_t, TableHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i].values(), i);
  std::vector<std::vector<std::size_t>> out(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      auto it = index.find(Compose(elements[i], elements[j]).values());
      if (it == index.end()) throw InvalidArgument("MultiplicationTable: set is not closed");
      out[i][j] = it->second;
    }
  }
  return out;
}

std::string MultiplicationTableCsv(const std::vector<FunctionTable>& elements) {
  std::ostringstream out;
  for (const auto& row : MultiplicationTable(elements)) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ringfunc
