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

#include "ringfunc/verify.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ringfunc/canonical.h"
#include "ringfunc/dual.h"
#include "ringfunc/funcspace.h"
#include "ringfunc/groups.h"
#include "ringfunc/ring.h"
#include "ringfunc/ring_poly.h"

namespace ringfunc {

namespace {

constexpr std::uint64_t kSeed = 0x72696e6766756e63ull;

// Thrown by Expect to fail the current check with a message.
struct CheckFailure {
  std::string message;
};

void Expect(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure{message};
}

class Runner {
 public:
  Runner(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  // `body` returns an optional detail string; failures come from Expect or
  // exceptions.
  void Run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult result{suite_, name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      result.detail = body();
      result.passed = true;
    } catch (const CheckFailure& failure) {
      result.detail = failure.message;
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

std::vector<Ring> SmallRingGrid() {
  return {Ring::Modular(2), Ring::Modular(3), Ring::Modular(4),
          Ring::FiniteField(2), Ring::FiniteField(3), Ring::FiniteField(2, 2)};
}

RingPoly RandomRingPoly(std::mt19937_64& rng, const Ring& ring, unsigned max_degree) {
  std::uniform_int_distribution<Elem> coeff(0, static_cast<Elem>(ring.size() - 1));
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::vector<Elem> c(degree(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return RingPoly(std::move(c));
}

Polynomial RandomIntPoly(std::mt19937_64& rng, std::int64_t bound, unsigned max_degree) {
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::vector<Integer> c(degree(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return Polynomial(std::move(c));
}

std::string Count(std::size_t n) { return std::to_string(n); }

std::uint64_t Factorial(std::uint64_t n) { return n <= 1 ? 1 : n * Factorial(n - 1); }

std::uint64_t PowU(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void CheckRingAxioms(const Ring& ring) {
  const Elem n = static_cast<Elem>(ring.size());
  for (Elem a = 0; a < n; ++a) {
    Expect(ring.Add(a, 0) == a && ring.Mul(a, 1) == a, "identity fails at " + ring.Format(a));
    Expect(ring.Add(a, ring.Neg(a)) == 0, "negation fails at " + ring.Format(a));
    for (Elem b = 0; b < n; ++b) {
      Expect(ring.Add(a, b) == ring.Add(b, a) && ring.Mul(a, b) == ring.Mul(b, a),
             "commutativity fails");
      for (Elem c = 0; c < n; ++c) {
        Expect(ring.Add(ring.Add(a, b), c) == ring.Add(a, ring.Add(b, c)), "additive associativity fails");
        Expect(ring.Mul(ring.Mul(a, b), c) == ring.Mul(a, ring.Mul(b, c)), "associativity fails");
        Expect(ring.Mul(a, ring.Add(b, c)) == ring.Add(ring.Mul(a, b), ring.Mul(a, c)),
               "distributivity fails");
      }
    }
  }
}

// ---------------------------------------------------------------- dual

void DualSuite(VerifyReport& report, std::uint64_t max_size, const Limits& limits) {
  Runner run(report, "dual");
  for (const Ring& base : SmallRingGrid()) {
    if (base.size() * base.size() > max_size) continue;
    const std::string tag = " over " + base.Descriptor();
    const Ring dual = DualRing(base, limits);

    run.Run("dual ring axioms" + tag, [&] {
      CheckRingAxioms(dual);
      return Count(dual.size()) + " elements";
    });

    run.Run("evaluation law g(a+b al) = g(a) + b g'(a) al" + tag, [&] {
      std::mt19937_64 rng(kSeed);
      std::size_t polys = 0;
      for (int t = 0; t < 300; ++t, ++polys) {
        RingPoly g = RandomRingPoly(rng, base, 8);
        RingPoly lifted = LiftToDual(dual, {g, RingPoly{}});
        for (Elem e = 0; e < dual.size(); ++e) {
          const DualElement expected = ToDualElement(dual, Evaluate(dual, lifted, e));
          Expect(EvalDual(g, base, dual.RealPart(e), dual.EpsPart(e)) == expected,
                 "law fails for " + Format(base, g) + " at " + dual.Format(e));
        }
        Expect(Induce(g, base) == FunctionTable(base, [&] {
                 std::vector<Elem> v(base.size());
                 for (Elem a = 0; a < base.size(); ++a) v[a] = dual.RealPart(Evaluate(dual, lifted, a));
                 return v;
               }()),
               "restriction to R differs for " + Format(base, g));
      }
      return Count(polys) + " random polynomials, every point";
    });

    run.Run("two-part law g1(a) + (b g1'(a) + g2(a)) al" + tag, [&] {
      std::mt19937_64 rng(kSeed + 1);
      for (int t = 0; t < 300; ++t) {
        DualPolynomial g{RandomRingPoly(rng, base, 8), RandomRingPoly(rng, base, 8)};
        RingPoly lifted = LiftToDual(dual, g);
        for (Elem e = 0; e < dual.size(); ++e) {
          Expect(EvalDualPoly(g, base, dual.RealPart(e), dual.EpsPart(e)) ==
                     ToDualElement(dual, Evaluate(dual, lifted, e)),
                 "law fails at " + dual.Format(e));
        }
      }
      return std::string("300 random g1 + g2 al");
    });

    run.Run("g null on R iff g al null on R[al]" + tag, [&] {
      std::mt19937_64 rng(kSeed + 2);
      std::size_t null_count = 0;
      const unsigned length = static_cast<unsigned>(std::min<std::uint64_t>(MonicNullDegree(base) + 1, 6));
      const std::uint64_t total = PowU(base.size(), length);
      auto check = [&](const RingPoly& g) {
        Expect(NullLiftHolds(g, base, limits), "fails for " + Format(base, g));
        if (IsNull(g, base)) ++null_count;
      };
      if (total <= 5000) {
        ForEachRingPoly(base, length, [&](const std::vector<Elem>& c) { check(RingPoly(c)); });
      } else {
        for (int t = 0; t < 3000; ++t) check(RandomRingPoly(rng, base, length - 1));
      }
      Expect(null_count > 0, "no null polynomial was exercised");
      return Count(null_count) + " null polynomials among the candidates";
    });

    run.Run("dual permutation criterion agrees with brute force" + tag, [&] {
      const unsigned length = static_cast<unsigned>(2 * base.size());
      const Limits unbounded = Limits::Unbounded();
      std::size_t perms = 0, checked = 0;
      auto check = [&](const RingPoly& f) {
        const bool criterion = PermCriterionDual(f, base);
        Expect(criterion == IsPermBruteForce(f, dual, unbounded), "disagreement at " + Format(base, f));
        perms += criterion;
        ++checked;
      };
      if (PowU(base.size(), length) <= 70'000) {
        ForEachRingPoly(base, length, [&](const std::vector<Elem>& c) { check(RingPoly(c)); });
      } else {
        std::mt19937_64 rng(kSeed + 3);
        for (int t = 0; t < 10'000; ++t) check(RandomRingPoly(rng, base, length - 1));
      }
      return Count(checked) + " polynomials, " + Count(perms) + " permute the dual ring";
    });
  }

  Runner local(report, "dual");
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  for (auto [p, n] : cases) {
    const Ring ring = Ring::PrimePower(p, n);
    if (ring.size() > max_size) continue;
    local.Run("local permutation criterion agrees with brute force over " + ring.Descriptor(), [&, p = p, n = n] {
      const unsigned length = static_cast<unsigned>(Beta(p, n) + 2);
      std::size_t checked = 0;
      auto check = [&](const RingPoly& f) {
        const Polynomial g = ToPolynomial(ring, f);
        Expect(PermCriterionLocal(g, p, n) == IsPermBruteForce(g, ring),
               "disagreement at " + g.ToString());
        ++checked;
      };
      if (PowU(ring.size(), length) <= 300'000) {
        ForEachRingPoly(ring, length, [&](const std::vector<Elem>& c) { check(RingPoly(c)); });
      } else {
        std::mt19937_64 rng(kSeed + 4);
        for (int t = 0; t < 10'000; ++t) check(RandomRingPoly(rng, ring, length - 1));
      }
      return Count(checked) + " polynomials of degree < beta(n)+2";
    });
  }
}

// -------------------------------------------------------------- groups

void GroupsSuite(VerifyReport& report, std::uint64_t max_size, const Limits& limits) {
  Runner run(report, "groups");
  for (const Ring& base : SmallRingGrid()) {
    if (base.size() * base.size() > max_size) continue;
    const std::string tag = " over " + base.Descriptor();
    const auto perms = EnumeratePolynomialPermutations(base, limits);
    const auto units = EnumerateUnitValuedFunctions(base, limits);

    run.Run("pointwise ring F(R) axioms, F(R)^x = unit-valued functions" + tag, [&] {
      const auto funcs = EnumeratePolynomialFunctions(base, limits);
      std::set<std::vector<Elem>> all;
      for (const auto& t : funcs) all.insert(t.values());
      std::mt19937_64 rng(kSeed + 5);
      std::uniform_int_distribution<std::size_t> pick(0, funcs.size() - 1);
      for (int t = 0; t < 2000; ++t) {
        const auto &a = funcs[pick(rng)], &b = funcs[pick(rng)], &c = funcs[pick(rng)];
        const auto sum = Pointwise(PointwiseOp::kAdd, a, b), prod = Pointwise(PointwiseOp::kMul, a, b);
        Expect(all.count(sum.values()) && all.count(prod.values()), "F(R) not closed");
        Expect(prod == Pointwise(PointwiseOp::kMul, b, a), "F(R) not commutative");
        Expect(Pointwise(PointwiseOp::kMul, a, Pointwise(PointwiseOp::kAdd, b, c)) ==
                   Pointwise(PointwiseOp::kAdd, prod, Pointwise(PointwiseOp::kMul, a, c)),
               "F(R) not distributive");
      }
      std::size_t invertible = 0;
      const auto one = FunctionTable::Constant(base, base.one());
      for (const auto& f : funcs) {
        bool has_inverse = false;
        for (const auto& g : funcs) {
          if (Pointwise(PointwiseOp::kMul, f, g) == one) {
            has_inverse = true;
            break;
          }
        }
        Expect(has_inverse == f.IsUnitValued(), "unit group differs from unit-valued functions");
        invertible += has_inverse;
      }
      Expect(invertible == units.size(), "unit count mismatch");
      return "|F(R)| = " + Count(funcs.size()) + ", |F(R)^x| = " + Count(invertible);
    });

    run.Run("theta action laws" + tag, [&] {
      for (const auto& g1 : perms) {
        std::set<std::vector<Elem>> image;
        for (const auto& f1 : units) {
          image.insert(ThetaApply(f1, g1).values());
          Expect(ThetaApply(InvertUnitTable(f1), g1) == InvertUnitTable(ThetaApply(f1, g1)),
                 "inverse law fails");
          for (const auto& g2 : perms) {
            Expect(ThetaApply(f1, Compose(g1, g2)) == ThetaApply(ThetaApply(f1, g1), g2),
                   "theta_{G1 o G2} is not theta_{G1} then theta_{G2}");
          }
        }
        Expect(image.size() == units.size(), "theta_G does not permute F(R)^x");
        std::mt19937_64 rng(kSeed + 6);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
        for (int t = 0; t < 200; ++t) {
          const auto &a = units[pick(rng)], &b = units[pick(rng)];
          Expect(ThetaApply(Pointwise(PointwiseOp::kMul, a, b), g1) ==
                     Pointwise(PointwiseOp::kMul, ThetaApply(a, g1), ThetaApply(b, g1)),
                 "theta_G is not multiplicative");
        }
      }
      return Count(perms.size()) + " permutations x " + Count(units.size()) + " unit-valued functions";
    });

    run.Run("semidirect product is a group" + tag, [&] {
      const auto h = SemidirectProductElements(base, limits);
      const GroupReport g = VerifyGroupAxioms(h);
      Expect(g.passed(), g.violations.empty() ? "axiom failure" : g.violations.front());
      return "order " + Count(g.order) + (g.associativity_exhaustive ? ", all triples" : ", sampled triples");
    });

    run.Run("semidirect decomposition (G,F) = (G,1)(id,F), normal (id,F), trivial meet" + tag, [&] {
      const auto one = FunctionTable::Constant(base, base.one());
      const auto id = FunctionTable::Identity(base);
      std::set<std::vector<Elem>> normal;
      for (const auto& f : units) normal.insert(f.values());
      for (const auto& g : perms) {
        for (const auto& f : units) {
          const SemidirectElement x{g, f};
          Expect(SemidirectMul({g, one}, {id, f}) == x, "factorization fails");
          for (const auto& f2 : units) {
            const auto conj = SemidirectMul(SemidirectMul(x, {id, f2}), SemidirectInv(x));
            Expect(conj.g == id && normal.count(conj.f.values()), "(id, F) subgroup is not normal");
          }
        }
        // (G, 1) lies in the (id, F) subgroup only for G = id.
        Expect((g == id) == (SemidirectElement{g, one}.g == id), "meet is not trivial");
      }
      return std::string("every element factors uniquely");
    });

    run.Run("stabilizer embeds in F(R)^x" + tag, [&] {
      const auto st = EnumerateStabilizer(base, limits);
      std::set<std::vector<Elem>> images;
      for (const auto& e : st) {
        Expect(IsNull(e.null_part, base), "stabilizer witness is not null");
        images.insert(StabToUvpf(e, base).values());
      }
      Expect(images.size() == st.size(), "stab_to_uvpf is not injective");
      const GroupReport g = VerifyGroupAxioms(st);
      Expect(g.passed() && g.abelian, "St(R) is not an abelian group");
      const Ring dual_ring = DualRing(base, limits);
      for (const auto& e1 : st) {
        for (Elem a = 0; a < base.size(); ++a) {
          const Elem fixed = dual_ring.MakeDual(a, 0);
          Expect(e1.table(fixed) == fixed, "stabilizer element moves an element of R");
        }
        for (const auto& e2 : st) {
          const auto composite = Compose(e1.table, e2.table);
          const auto product = Pointwise(PointwiseOp::kMul, StabToUvpf(e1, base), StabToUvpf(e2, base));
          Expect(PairOfDualTable(composite).f == product, "stab_to_uvpf is not multiplicative");
        }
      }
      const bool bijective = st.size() == units.size();
      Expect(bijective == base.is_field(), "bijectivity should hold exactly for fields");
      if (base.is_field()) {
        Expect(st.size() == PowU(base.size() - 1, base.size()), "|St(F_q)| != (q-1)^q");
      }
      return "|St| = " + Count(st.size()) + ", |F(R)^x| = " + Count(units.size());
    });

    run.Run("embedding phi of P_R(R[al]) into P(R) x| F(R)^x" + tag, [&] {
      const EmbeddingReport e = VerifyEmbedding(base, limits);
      Expect(e.witnesses_consistent && e.injective && e.homomorphism,
             e.violations.empty() ? "embedding failure" : e.violations.front());
      Expect(e.perms == perms.size() && e.unit_valued == units.size(), "group orders disagree");
      if (base.is_field()) {
        const std::uint64_t q = base.size();
        Expect(e.surjective, "phi is not surjective over a field");
        Expect(e.dual_perms == Factorial(q) * PowU(q - 1, q), "|P_Fq(Fq[al])| != q!(q-1)^q");
      } else {
        Expect(!e.surjective, "phi is unexpectedly surjective");
        Expect(e.dual_perms == e.stabilizer * e.perms, "|P_R(R[al])| != |St(R)| |P(R)|");
        Expect(Integer(e.image) < e.semidirect_order, "orders are not strictly ordered");
      }
      return "|P_R(R[al])| = " + Count(e.dual_perms) + ", |H| = " + e.semidirect_order.str() +
             ", image " + Count(e.image);
    });

    run.Run("phi respects composition of polynomials" + tag, [&] {
      const auto dperms = EnumerateDualPerms(base, limits);
      std::mt19937_64 rng(kSeed + 7);
      std::uniform_int_distribution<std::size_t> pick(0, dperms.size() - 1);
      for (int t = 0; t < 300; ++t) {
        const RingPoly& f = dperms[pick(rng)].witness;
        const RingPoly& f1 = dperms[pick(rng)].witness;
        Expect(EmbedPhi(Compose(base, f, f1), base) == SemidirectMul(EmbedPhi(f, base), EmbedPhi(f1, base)),
               "phi(f o f1) != phi(f) phi(f1)");
      }
      return std::string("300 random pairs");
    });
  }
}

// ----------------------------------------------------------- canonical

void CanonicalSuite(VerifyReport& report, std::uint64_t max_size, const Limits& limits) {
  Runner run(report, "canonical");
  run.Run("|kernel basis| = beta(n)", [&] {
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned n : {2u, 3u, 4u}) {
        Expect(KernelBasis(p, n).size() == Beta(p, n),
               "mismatch at p=" + std::to_string(p) + ", n=" + std::to_string(n));
      }
    }
    return std::string("p in {2,3,5}, n in {2,3,4}");
  });

  const std::vector<std::pair<std::uint64_t, unsigned>> kernel_cases = {{2, 2}, {2, 3}, {3, 2}};
  for (auto [p, n] : kernel_cases) {
    const Ring ring = Ring::PrimePower(p, n);
    if (ring.size() > max_size) continue;
    run.Run("kernel elements vanish mod p^(n-1) and are distinct mod p^n over " + ring.Descriptor(),
            [&, p = p, n = n] {
              const Ring lower = Ring::PrimePower(p, n - 1);
              std::unordered_set<std::vector<Elem>, TableHash> tables;
              const auto kernel = EnumerateKernel(p, n, limits);
              for (const auto& f : kernel) {
                Expect(IsNull(f, lower), f.ToString() + " is not null mod p^(n-1)");
                tables.insert(Induce(f, ring).values());
              }
              Expect(tables.size() == kernel.size() && Integer(kernel.size()) == KernelSize(p, n),
                     "kernel size mismatch");
              return Count(kernel.size()) + " distinct tables";
            });
  }

  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  for (auto [p, n] : cases) {
    const Ring ring = Ring::PrimePower(p, n);
    if (ring.size() > max_size) continue;
    run.Run("canonicalize is idempotent and table-preserving over " + ring.Descriptor(), [&, p = p, n = n] {
      std::mt19937_64 rng(kSeed + 8);
      for (int t = 0; t < 300; ++t) {
        const Polynomial f = RandomIntPoly(rng, 50, 12);
        const CanonicalForm form = Canonicalize(f, p, n);
        Expect(Induce(form.ToPolynomial(), ring) == Induce(f, ring), "table changed for " + f.ToString());
        Expect(Canonicalize(form.ToPolynomial(), p, n) == form, "not idempotent for " + f.ToString());
        Expect(CanonicalFormOfTable(Induce(f, ring)) == form, "table route differs for " + f.ToString());
        if (IsUnitValued(f, ring)) {
          const UVCanonicalForm uv = UvpfCanonicalize(f, p, n);
          Expect(Induce(uv.ToPolynomial(), ring) == Induce(f, ring), "unit-valued form changes the table");
        }
      }
      return std::string("300 random polynomials of degree <= 12");
    });
  }

  if (max_size >= 4) {
    run.Run("canonical forms biject with polynomial functions mod 4", [&] {
      const Ring ring = Ring::PrimePower(2, 2);
      std::set<std::vector<Elem>> tables;
      const auto forms = EnumerateCanonicalForms(2, 2, limits);
      for (const auto& form : forms) {
        const auto table = Induce(form.ToPolynomial(), ring);
        Expect(CanonicalFormOfTable(table) == form, "canonicalize o induce moves a form");
        tables.insert(table.values());
      }
      Expect(forms.size() == 64 && tables.size() == 64 && Integer(64) == CountPolyFun(2, 2),
             "expected 64 forms and 64 tables");
      const auto uv = EnumerateUvpfForms(2, 2, limits);
      std::set<std::vector<Elem>> uv_tables;
      for (const auto& form : uv) {
        const auto table = Induce(form.ToPolynomial(), ring);
        Expect(table.IsUnitValued() && UvpfCanonicalFormOfTable(table) == form, "unit-valued form mismatch");
        uv_tables.insert(table.values());
      }
      Expect(uv.size() == 16 && uv_tables.size() == 16, "expected 16 unit-valued forms");
      return std::string("64 forms / 64 tables, 16 unit-valued forms / 16 tables");
    });
  }

  if (max_size >= 9) {
    run.Run("unit-valued forms mod 9 induce distinct unit-valued tables", [&] {
      const Ring ring = Ring::PrimePower(3, 2);
      std::unordered_set<std::vector<Elem>, TableHash> tables;
      const auto forms = EnumerateUvpfForms(3, 2, limits);
      for (const auto& form : forms) {
        const auto table = Induce(form.ToPolynomial(), ring);
        Expect(table.IsUnitValued(), "form is not unit-valued");
        tables.insert(table.values());
      }
      Expect(tables.size() == forms.size() && Integer(forms.size()) == CountUvpf(3, 2), "count mismatch");
      return Count(forms.size()) + " forms";
    });
  }

  run.Run("unit-valued mod p^n iff mod p^k iff mod p", [&] {
    std::mt19937_64 rng(kSeed + 9);
    std::size_t checked = 0;
    for (std::uint64_t p : {2, 3}) {
      for (unsigned n = 1; n <= 4; ++n) {
        const Ring top = Ring::PrimePower(p, n);
        if (top.size() > std::max<std::uint64_t>(max_size, 81)) continue;
        for (int t = 0; t < 200; ++t) {
          const Polynomial f = RandomIntPoly(rng, 30, 8);
          const bool at_p = IsUnitValued(f, Ring::PrimePower(p, 1));
          for (unsigned k = 1; k <= n; ++k) {
            Expect(IsUnitValued(f, Ring::PrimePower(p, k)) == at_p, "chain breaks for " + f.ToString());
          }
          ++checked;
        }
      }
    }
    return Count(checked) + " random polynomials";
  });

  run.Run("distinct mod p^n stays distinct mod p^k, k >= n", [&] {
    std::mt19937_64 rng(kSeed + 10);
    std::size_t distinct = 0;
    for (std::uint64_t p : {2, 3}) {
      for (unsigned n = 1; n <= 3; ++n) {
        for (int t = 0; t < 200; ++t) {
          const Polynomial f = RandomIntPoly(rng, 4, 6), g = RandomIntPoly(rng, 4, 6);
          if (Induce(f, Ring::PrimePower(p, n)) == Induce(g, Ring::PrimePower(p, n))) continue;
          ++distinct;
          for (unsigned k = n; k <= 4; ++k) {
            Expect(!(Induce(f, Ring::PrimePower(p, k)) == Induce(g, Ring::PrimePower(p, k))),
                   "tables merge mod p^k");
          }
        }
      }
    }
    return Count(distinct) + " distinct pairs";
  });
}

// ------------------------------------------------------------ counting

void CountingSuite(VerifyReport& report, std::uint64_t max_size, const Limits& limits) {
  Runner run(report, "counting");
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {{2, 2}, {2, 3}, {3, 2}};
  for (auto [p, n] : cases) {
    if (PowU(p, n) > max_size) continue;
    const std::string tag = " (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
    run.Run("unit-valued count formula matches brute force" + tag, [&, p = p, n = n] {
      const Integer formula = CountUvpf(p, n), brute = CountUvpfBruteForce(p, n, limits);
      Expect(formula == brute, "formula " + formula.str() + " vs brute force " + brute.str());
      return formula.str();
    });
    run.Run("polynomial function count formula matches brute force" + tag, [&, p = p, n = n] {
      const Integer formula = CountPolyFun(p, n), brute = CountPolyFunBruteForce(p, n, limits);
      Expect(formula == brute, "formula " + formula.str() + " vs brute force " + brute.str());
      return formula.str();
    });
  }

  run.Run("count recursions and beta bounds", [&] {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (unsigned n = 2; n <= 8; ++n) {
        const Integer step = KernelSize(p, n);
        Expect(CountPolyFun(p, n) == CountPolyFun(p, n - 1) * step, "polyfun recursion fails");
        Expect(CountUvpf(p, n) == CountUvpf(p, n - 1) * step, "uvpf recursion fails");
        Expect(Beta(p, n) >= Beta(p, n - 1) && Beta(p, n) <= n * p, "beta bounds fail");
      }
    }
    return std::string("p in {2,3,5,7}, n <= 8");
  });

  run.Run("polynomial functions on F_q: q^q functions, (q-1)^q units, q! permutations", [&] {
    for (const Ring& field : {Ring::FiniteField(2), Ring::FiniteField(3), Ring::FiniteField(2, 2)}) {
      if (field.size() > max_size) continue;
      const std::uint64_t q = field.size();
      Expect(EnumeratePolynomialFunctions(field, limits).size() == PowU(q, q), "|F(F_q)| != q^q");
      Expect(EnumerateUnitValuedFunctions(field, limits).size() == PowU(q - 1, q), "|F(F_q)^x| != (q-1)^q");
      Expect(EnumeratePolynomialPermutations(field, limits).size() == Factorial(q), "|P(F_q)| != q!");
    }
    return std::string("q in {2,3,4}");
  });
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string VerifyReport::ToText() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << '[' << c.suite << "] " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << '\n';
  }
  out << checks.size() - failures() << '/' << checks.size() << " checks passed\n";
  return out.str();
}

nlohmann::json VerifyReport::ToJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"passed", passed()}, {"failures", failures()}, {"checks", list}};
}

Suite ParseSuite(const std::string& name) {
  if (name == "all") return Suite::kAll;
  if (name == "dual") return Suite::kDual;
  if (name == "groups") return Suite::kGroups;
  if (name == "canonical") return Suite::kCanonical;
  if (name == "counting") return Suite::kCounting;
  throw InvalidArgument("unknown suite '" + name + "'");
}

VerifyReport RunVerification(Suite suite, std::uint64_t max_size, const Limits& limits) {
  VerifyReport report;
  if (suite == Suite::kAll || suite == Suite::kDual) DualSuite(report, max_size, limits);
  if (suite == Suite::kAll || suite == Suite::kGroups) GroupsSuite(report, max_size, limits);
  if (suite == Suite::kAll || suite == Suite::kCanonical) CanonicalSuite(report, max_size, limits);
  if (suite == Suite::kAll || suite == Suite::kCounting) CountingSuite(report, max_size, limits);
  return report;
}

}  // namespace ringfunc
