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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "oracles.h"
#include "ringfunc/canonical.h"
#include "ringfunc/dual.h"
#include "ringfunc/funcspace.h"
#include "ringfunc/groups.h"
#include "ringfunc/verify.h"

namespace ringfunc {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void Require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Polynomial ToPoly(const testing::Coeffs& c) { return Polynomial(std::vector<Integer>(c.begin(), c.end())); }

std::string S(const Integer& v) { return v.str(); }

// 1. Unit-valued functions mod 4.
Outcome UnitValuedMod4() {
  Outcome o;
  const auto start = Clock::now();
  const Integer formula = CountUvpf(2, 2);
  const Integer brute = CountUvpfBruteForce(2, 2);
  const std::size_t oracle = testing::DistinctTablesMod(4, static_cast<unsigned>(Beta(2, 2)), true);
  const double t = Seconds(start);
  o.Require(formula == 16, "formula gave " + S(formula));
  o.Require(brute == 16, "brute force gave " + S(brute));
  o.Require(oracle == 16, "independent oracle gave " + std::to_string(oracle));
  o.Require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.passed) o.detail = "formula = brute force = 16 over 256 candidates";
  return o;
}

// 2. Unit-valued count formula against brute force.
Outcome CountFormula() {
  Outcome o;
  const std::vector<std::tuple<std::uint64_t, unsigned, int>> cases = {{2, 2, 16}, {2, 3, 256}, {3, 2, 5832}};
  for (auto [p, n, expected] : cases) {
    const auto start = Clock::now();
    const Integer formula = CountUvpf(p, n), brute = CountUvpfBruteForce(p, n);
    const double t = Seconds(start);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + ")";
    o.Require(formula == expected && brute == expected,
              tag + " formula " + S(formula) + " vs brute force " + S(brute));
    o.Require(t < 60.0, tag + " took " + std::to_string(t) + " s");
  }
  // (2,3) against the plain-integer oracle as well.
  o.Require(testing::DistinctTablesMod(8, static_cast<unsigned>(Beta(2, 3)), true) == 256,
            "independent oracle disagrees at (2,3)");
  if (o.passed) o.detail = "(2,2)=16, (2,3)=256, (3,2)=5832";
  return o;
}

// 3. Kernel sizes.
Outcome KernelSizes() {
  Outcome o;
  const std::vector<std::tuple<std::uint64_t, unsigned, std::size_t>> cases = {{2, 2, 16}, {2, 3, 16}, {3, 2, 729}};
  for (auto [p, n, expected] : cases) {
    const auto start = Clock::now();
    const Ring ring = Ring::PrimePower(p, n), lower = Ring::PrimePower(p, n - 1);
    const auto m = static_cast<std::int64_t>(ring.size()), ml = static_cast<std::int64_t>(lower.size());
    std::set<std::vector<std::int64_t>> tables;
    bool vanish = true;
    const auto kernel = EnumerateKernel(p, n);
    for (const auto& f : kernel) {
      testing::Coeffs c;
      for (const auto& v : f.coefficients()) c.push_back(static_cast<std::int64_t>(((v % m) + m) % m));
      for (auto v : testing::TableMod(c, ml)) vanish &= v == 0;
      tables.insert(testing::TableMod(c, m));
    }
    const double t = Seconds(start);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + ")";
    o.Require(kernel.size() == expected && tables.size() == expected,
              tag + " gave " + std::to_string(kernel.size()) + " elements, " + std::to_string(tables.size()) +
                  " distinct tables");
    o.Require(vanish, tag + " has an element not zero mod p^(n-1)");
    o.Require(t < 10.0, tag + " took " + std::to_string(t) + " s");
  }
  if (o.passed) o.detail = "(2,2)=16, (2,3)=16, (3,2)=729 distinct tables";
  return o;
}

// 4. Stabilizer orders.
Outcome Stabilizers() {
  Outcome o;
  const auto start = Clock::now();
  const Ring z4 = Ring::Modular(4);
  const auto st = EnumerateStabilizer(z4);
  std::set<std::vector<Elem>> expected, got;
  for (const char* s : {"0", "2(x^2-x)", "2(x^3-x)", "2(x^3-x^2)"}) {
    const RingPoly g = RingPoly::From(z4, Polynomial::Parse(s));
    o.Require(IsNull(g, z4), std::string(s) + " is not null on Z_4");
    expected.insert(Induce(Add(z4, RingPoly({1}), Derive(z4, g)), z4).values());
  }
  for (const auto& e : st) got.insert(StabToUvpf(e, z4).values());
  o.Require(st.size() == 4, "|St(Z_4)| = " + std::to_string(st.size()));
  o.Require(expected.size() == 4 && got == expected, "St(Z_4) differs from the four null polynomials");
  const std::size_t f2 = EnumerateStabilizer(Ring::FiniteField(2)).size();
  const std::size_t f3 = EnumerateStabilizer(Ring::FiniteField(3)).size();
  o.Require(f2 == 1, "|St(F_2)| = " + std::to_string(f2));
  o.Require(f3 == 8, "|St(F_3)| = " + std::to_string(f3));
  const double t = Seconds(start);
  o.Require(t < 5.0, "took " + std::to_string(t) + " s");
  if (o.passed) o.detail = "|St(Z_4)| = 4, |St(F_2)| = 1, |St(F_3)| = 8";
  return o;
}

// 5. Dual permutation groups over F_q.
Outcome FieldEmbedding() {
  Outcome o;
  const std::vector<std::pair<Ring, std::size_t>> cases = {
      {Ring::FiniteField(2), 2}, {Ring::FiniteField(3), 48}, {Ring::FiniteField(2, 2), 1944}};
  std::string detail;
  for (const auto& [field, expected] : cases) {
    const auto start = Clock::now();
    const EmbeddingReport r = VerifyEmbedding(field);
    const double t = Seconds(start);
    const std::string tag = field.Descriptor();
    o.Require(r.dual_perms == expected, tag + ": " + std::to_string(r.dual_perms) + " dual permutations");
    o.Require(r.witnesses_consistent && r.injective && r.homomorphism && r.surjective,
              tag + ": " + (r.violations.empty() ? "phi is not a bijective homomorphism" : r.violations.front()));
    o.Require(t < 120.0, tag + " took " + std::to_string(t) + " s");
    detail += (detail.empty() ? "" : ", ") + std::to_string(r.dual_perms);
  }
  if (o.passed) o.detail = "orders " + detail + "; phi is an isomorphism";
  return o;
}

// 6. Over Z_4 the embedding is not onto.
Outcome NonIsomorphism() {
  Outcome o;
  const auto start = Clock::now();
  const EmbeddingReport r = VerifyEmbedding(Ring::Modular(4));
  // |P(Z_4)| from plain-integer tables.
  std::set<std::vector<std::int64_t>> perms;
  testing::Coeffs c(4, 0);
  while (true) {
    if (testing::IsPermMod(c, 4)) perms.insert(testing::TableMod(c, 4));
    unsigned k = 0;
    while (k < 4 && ++c[k] == 4) c[k++] = 0;
    if (k == 4) break;
  }
  const std::size_t p = perms.size();
  o.Require(r.perms == p, "library |P(Z_4)| = " + std::to_string(r.perms) + ", oracle " + std::to_string(p));
  o.Require(r.injective && r.homomorphism, "phi is not an injective homomorphism");
  o.Require(r.image == 4 * p, "|image| = " + std::to_string(r.image));
  o.Require(r.semidirect_order == 16 * p, "|H| = " + S(r.semidirect_order));
  o.Require(!r.surjective, "phi is onto");
  const double t = Seconds(start);
  o.Require(t < 60.0, "took " + std::to_string(t) + " s");
  if (o.passed) {
    o.detail = "|P(Z_4)| = " + std::to_string(p) + ", |image| = 4|P| = " + std::to_string(r.image) +
               " < |H| = 16|P| = " + S(r.semidirect_order);
  }
  return o;
}

// 7. Permutation criteria against brute force.
Outcome CriteriaAgree() {
  Outcome o;
  std::size_t checked = 0;
  // Exhaustive over Z_2, Z_3 with the plain-integer oracle, F_4 with table lookups.
  for (std::int64_t m : {2, 3}) {
    const Ring base = Ring::Modular(m);
    ForEachRingPoly(base, static_cast<unsigned>(2 * m), [&](const std::vector<Elem>& v) {
      const testing::Coeffs c(v.begin(), v.end());
      ++checked;
      o.Require(PermCriterionDual(RingPoly(v), base) == testing::IsDualPermMod(c, m),
                "dual criterion disagrees over Z_" + std::to_string(m));
      o.Require(PermCriterionLocal(ToPoly(c), static_cast<std::uint64_t>(m), 1) == testing::IsPermMod(c, m),
                "local criterion disagrees over Z_" + std::to_string(m));
    });
  }
  const Ring f4 = Ring::FiniteField(2, 2);
  const Ring d4 = DualRing(f4);
  ForEachRingPoly(f4, 8, [&](const std::vector<Elem>& v) {
    ++checked;
    const RingPoly f(v);
    o.Require(PermCriterionDual(f, f4) == IsPermBruteForce(f, d4), "dual criterion disagrees over F_4");
  });
  std::mt19937_64 rng(20260917);
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    const Ring base = Ring::PrimePower(p, n);
    const auto m = static_cast<std::int64_t>(base.size());
    for (int t = 0; t < 10'000; ++t) {
      const auto c = testing::RandomCoeffs(rng, m, static_cast<unsigned>(2 * m - 1));
      ++checked;
      o.Require(PermCriterionDual(ToPoly(c), base) == testing::IsDualPermMod(c, m),
                "dual criterion disagrees over Z_" + std::to_string(m));
      o.Require(PermCriterionLocal(ToPoly(c), p, n) == testing::IsPermMod(c, m),
                "local criterion disagrees over Z_" + std::to_string(m));
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " polynomials, zero disagreements";
  return o;
}

// 8. Canonical forms mod 4.
Outcome CanonicalBijection() {
  Outcome o;
  const auto start = Clock::now();
  const Ring z4 = Ring::Modular(4);
  std::set<std::vector<Elem>> all_tables, uv_tables, form_tables, uv_form_tables;
  ForEachRingPoly(z4, 4, [&](const std::vector<Elem>& v) {
    const FunctionTable t = Induce(RingPoly(v), z4);
    all_tables.insert(t.values());
    if (t.IsUnitValued()) uv_tables.insert(t.values());
  });
  const auto forms = EnumerateCanonicalForms(2, 2);
  for (const auto& f : forms) {
    const FunctionTable t = Induce(f.ToPolynomial(), z4);
    form_tables.insert(t.values());
    o.Require(Canonicalize(f.ToPolynomial(), 2, 2) == f && CanonicalFormOfTable(t) == f,
              "a canonical form is not fixed");
  }
  const auto uv = EnumerateUvpfForms(2, 2);
  for (const auto& f : uv) {
    const FunctionTable t = Induce(f.ToPolynomial(), z4);
    uv_form_tables.insert(t.values());
    o.Require(UvpfCanonicalize(f.ToPolynomial(), 2, 2) == f && UvpfCanonicalFormOfTable(t) == f,
              "a unit-valued form is not fixed");
  }
  o.Require(forms.size() == 64 && form_tables == all_tables && all_tables.size() == 64,
            std::to_string(forms.size()) + " forms vs " + std::to_string(all_tables.size()) + " tables");
  o.Require(uv.size() == 16 && uv_form_tables == uv_tables && uv_tables.size() == 16,
            std::to_string(uv.size()) + " unit-valued forms vs " + std::to_string(uv_tables.size()) + " tables");
  const double t = Seconds(start);
  o.Require(t < 5.0, "took " + std::to_string(t) + " s");
  if (o.passed) o.detail = "64 forms <-> 64 tables, 16 unit-valued forms <-> 16 tables";
  return o;
}

// 9. Property suites on the small-ring grid.
Outcome PropertySuites() {
  Outcome o;
  const VerifyReport report = RunVerification(Suite::kAll, 27);
  for (const auto& c : report.checks) {
    o.Require(c.passed, "[" + c.suite + "] " + c.name + ": " + c.detail);
  }
  if (o.passed) o.detail = std::to_string(report.checks.size()) + " checks, zero failures";
  return o;
}

}  // namespace
}  // namespace ringfunc

int main() {
  using namespace ringfunc;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"unit-valued functions mod 4", UnitValuedMod4},
      {"unit-valued count formula vs brute force", CountFormula},
      {"kernel sizes", KernelSizes},
      {"stabilizer orders", Stabilizers},
      {"dual permutation groups over F_q", FieldEmbedding},
      {"embedding over Z_4 is not onto", NonIsomorphism},
      {"permutation criteria vs brute force", CriteriaAgree},
      {"canonical form bijection mod 4", CanonicalBijection},
      {"property suites", PropertySuites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s criterion %zu: %s (%.2f s) -- %s\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), Seconds(start), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
