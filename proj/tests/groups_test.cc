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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "ringfunc/dual.h"

namespace ringfunc {
namespace {

std::uint64_t Factorial(std::uint64_t n) { return n <= 1 ? 1 : n * Factorial(n - 1); }

TEST(SemidirectTest, LawOnHandExample) {
  const Ring z3 = Ring::Modular(3);
  const FunctionTable g1(z3, {1, 2, 0}), g2(z3, {0, 2, 1});
  const FunctionTable f1(z3, {1, 2, 2}), f2(z3, {2, 1, 1});
  const SemidirectElement x{g1, f1}, y{g2, f2};
  const SemidirectElement xy = SemidirectMul(x, y);
  EXPECT_EQ(xy.g, Compose(g1, g2));
  // (F1 o G2) F2 evaluated pointwise.
  for (Elem r = 0; r < 3; ++r) EXPECT_EQ(xy.f(r), z3.Mul(f1(g2(r)), f2(r)));
  EXPECT_EQ(SemidirectMul(x, SemidirectInv(x)), SemidirectIdentity(z3));
  EXPECT_EQ(SemidirectMul(SemidirectInv(x), x), SemidirectIdentity(z3));
}

TEST(SemidirectTest, ThetaRejectsBadInput) {
  const Ring z4 = Ring::Modular(4);
  EXPECT_THROW(ThetaApply(FunctionTable::Identity(z4), FunctionTable::Identity(z4)), InvalidArgument);
  EXPECT_THROW(ThetaApply(FunctionTable::Constant(z4, 1), FunctionTable::Constant(z4, 1)), InvalidArgument);
}

TEST(DualPermsTest, FieldOrders) {
  for (std::uint64_t q : {2, 3, 4}) {
    const Ring f = q == 4 ? Ring::FiniteField(2, 2) : Ring::FiniteField(q);
    const auto perms = EnumerateDualPerms(f);
    std::uint64_t expected = Factorial(q);
    for (std::uint64_t k = 0; k < q; ++k) expected *= q - 1;
    EXPECT_EQ(perms.size(), expected) << q;
  }
}

TEST(DualPermsTest, TablesMatchPairOracle) {
  const Ring z4 = Ring::Modular(4);
  const Ring d = DualRing(z4);
  for (const auto& e : EnumerateDualPerms(z4)) {
    testing::Coeffs c(e.witness.coefficients().begin(), e.witness.coefficients().end());
    ASSERT_TRUE(testing::IsDualPermMod(c, 4));
    for (Elem x = 0; x < d.size(); ++x) {
      const auto v = testing::EvalDualMod(c, {d.RealPart(x), d.EpsPart(x)}, 4);
      ASSERT_EQ(e.table(x), d.MakeDual(static_cast<Elem>(v.a), static_cast<Elem>(v.b)));
    }
    EXPECT_EQ(DualTableFromPair(d, e.key.g, e.key.f), e.table);
    EXPECT_EQ(PairOfDualTable(e.table), e.key);
  }
}

// The pinned enumeration degree for Z_4 must agree with the empirical bound.
TEST(DualPermsTest, PinnedDegreeForZ4MatchesStabilization) {
  const Ring z4 = Ring::Modular(4);
  const unsigned pinned = DualEnumerationDegree(z4);
  EXPECT_EQ(pinned, 4u);
  EXPECT_LE(EstablishDualDegreeBound(z4), pinned);
  EXPECT_EQ(EnumerateDualPerms(z4, pinned).size(), EnumerateDualPerms(z4, pinned + 2).size());
}

TEST(DualPermsTest, FieldDegreeIsTwiceOrder) {
  EXPECT_EQ(DualEnumerationDegree(Ring::FiniteField(3)), 6u);
  EXPECT_EQ(DualEnumerationDegree(Ring::FiniteField(2, 2)), 8u);
}

TEST(StabilizerTest, Z4HasFourElements) {
  const Ring z4 = Ring::Modular(4);
  const auto st = EnumerateStabilizer(z4);
  ASSERT_EQ(st.size(), 4u);
  std::set<std::vector<Elem>> expected, got;
  for (const char* s : {"0", "2(x^2-x)", "2(x^3-x)", "2(x^3-x^2)"}) {
    const RingPoly g = RingPoly::From(z4, Polynomial::Parse(s));
    ASSERT_TRUE(IsNull(g, z4));
    expected.insert(Induce(Add(z4, RingPoly({1}), Derive(z4, g)), z4).values());
  }
  for (const auto& e : st) got.insert(StabToUvpf(e, z4).values());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(EnumerateUnitValuedFunctions(z4).size(), 16u);
}

TEST(StabilizerTest, FieldOrders) {
  EXPECT_EQ(EnumerateStabilizer(Ring::FiniteField(2)).size(), 1u);
  EXPECT_EQ(EnumerateStabilizer(Ring::FiniteField(3)).size(), 8u);
}

TEST(GroupsTest, Z4IsNotIsomorphism) {
  const EmbeddingReport r = VerifyEmbedding(Ring::Modular(4));
  EXPECT_TRUE(r.injective);
  EXPECT_TRUE(r.homomorphism);
  EXPECT_FALSE(r.surjective);
  EXPECT_EQ(r.perms, 8u);
  EXPECT_EQ(r.image, 4 * r.perms);
  EXPECT_EQ(r.semidirect_order, 16 * r.perms);
}

TEST(GroupsTest, AxiomsCatchBrokenSets) {
  const Ring z3 = Ring::Modular(3);
  const auto h = SemidirectProductElements(z3);
  EXPECT_TRUE(VerifyGroupAxioms(h).passed());
  auto broken = h;
  broken.pop_back();
  const GroupReport r = VerifyGroupAxioms(broken);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.violations.empty());
}

TEST(GroupsTest, EmbedPhiRejectsNonPermutations) {
  EXPECT_THROW(EmbedPhi(Polynomial::Parse("x^2"), Ring::Modular(4)), InvalidArgument);
  const SemidirectElement e = EmbedPhi(Polynomial::Parse("x+1"), Ring::Modular(4));
  EXPECT_EQ(e.g.values(), (std::vector<Elem>{1, 2, 3, 0}));
  EXPECT_EQ(e.f, FunctionTable::Constant(Ring::Modular(4), 1));
}

TEST(GroupsTest, MultiplicationTableIsLatinSquare) {
  const auto perms = EnumeratePolynomialPermutations(Ring::Modular(4));
  const auto table = MultiplicationTable(perms);
  ASSERT_EQ(table.size(), perms.size());
  for (const auto& row : table) EXPECT_EQ(std::set<std::size_t>(row.begin(), row.end()).size(), row.size());
  const std::string csv = MultiplicationTableCsv(perms);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(perms.size()));
}

TEST(GroupsTest, JsonExportIsStable) {
  const Ring f2 = Ring::FiniteField(2);
  const auto a = DualPermsToJson(f2, EnumerateDualPerms(f2), true).dump();
  const auto b = DualPermsToJson(f2, EnumerateDualPerms(f2), true).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"order\":2"), std::string::npos);
}

TEST(GroupsTest, CapsAreEnforced) {
  Limits tight;
  tight.enumeration = 1000;
  EXPECT_THROW(EnumerateDualPerms(Ring::FiniteField(2, 2), tight), SizeCapError);
}

}  // namespace
}  // namespace ringfunc
