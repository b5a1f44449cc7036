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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "ringfunc/dual.h"

namespace ringfunc {
namespace {

Polynomial ToPoly(const testing::Coeffs& c) { return Polynomial(std::vector<Integer>(c.begin(), c.end())); }

TEST(FunctionTableTest, ValidatesValues) {
  EXPECT_THROW(FunctionTable(Ring::Modular(3), {0, 1}), InvalidArgument);
  EXPECT_THROW(FunctionTable(Ring::Modular(3), {0, 1, 3}), InvalidArgument);
  const FunctionTable id = FunctionTable::Identity(Ring::Modular(3));
  EXPECT_TRUE(id.IsBijective());
  EXPECT_FALSE(id.IsUnitValued());
  EXPECT_TRUE(FunctionTable::Constant(Ring::Modular(3), 2).IsUnitValued());
}

TEST(FuncspaceTest, PredicatesMatchOracles) {
  std::mt19937_64 rng(12);
  for (std::int64_t m : {4, 6, 8, 9, 12}) {
    const Ring ring = Ring::Modular(m);
    for (int t = 0; t < 300; ++t) {
      const auto c = testing::RandomCoeffs(rng, m, 8);
      const Polynomial f = ToPoly(c);
      const auto table = testing::TableMod(c, m);
      EXPECT_EQ(IsNull(f, ring), std::all_of(table.begin(), table.end(), [](auto v) { return v == 0; }));
      EXPECT_EQ(IsUnitValued(f, ring), testing::IsUnitValuedMod(c, m));
      EXPECT_EQ(IsPermBruteForce(f, ring), testing::IsPermMod(c, m));
    }
  }
}

TEST(FuncspaceTest, SpecExamples) {
  const Ring z4 = Ring::Modular(4);
  EXPECT_TRUE(IsNull(Polynomial::Parse("(x^2-x)^2"), z4));
  EXPECT_FALSE(IsUnitValued(Polynomial::Parse("x"), z4));
  EXPECT_TRUE(IsUnitValued(Polynomial::Parse("x^2+x+1"), z4));
  EXPECT_TRUE(PermCriterionDual(Polynomial::Parse("2x^3+2x"), Ring::FiniteField(3)));
}

// Over Z_{p^n}: residue permutation plus derivative nonzero mod p.
TEST(FuncspaceTest, LocalCriterionExhaustive) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    const std::int64_t m = static_cast<std::int64_t>(Ring::PrimePower(p, n).size());
    const unsigned length = p == 2 ? 6 : 5;
    testing::Coeffs c(length, 0);
    std::size_t perms = 0;
    while (true) {
      const bool expected = testing::IsPermMod(c, m);
      ASSERT_EQ(PermCriterionLocal(ToPoly(c), p, n), expected);
      perms += expected;
      unsigned k = 0;
      while (k < length && ++c[k] == m) c[k++] = 0;
      if (k == length) break;
    }
    EXPECT_GT(perms, 0u);
  }
}

TEST(FuncspaceTest, LocalCriterionExamples) {
  EXPECT_TRUE(PermCriterionLocal(Polynomial::Parse("x+2x^2"), 2, 2));
  EXPECT_FALSE(PermCriterionLocal(Polynomial::Parse("x^2"), 2, 2));
  EXPECT_TRUE(PermCriterionLocal(Polynomial::Parse("x"), 5, 3));
}

TEST(FuncspaceTest, LocalCriterionDegreeOne) {
  // x^p permutes Z_p although its derivative vanishes there.
  EXPECT_TRUE(PermCriterionLocal(Polynomial::Parse("x^2"), 2, 1));
  EXPECT_TRUE(PermCriterionLocal(Polynomial::Parse("x^3"), 3, 1));
  EXPECT_FALSE(PermCriterionLocal(Polynomial::Parse("x^2"), 2, 2));
}

TEST(FuncspaceTest, DerivativeDomainVariantsDiffer) {
  const Polynomial f = Polynomial::Parse("x+x^2+x^3");
  EXPECT_FALSE(IsPermBruteForce(f, Ring::Modular(4)));
  EXPECT_FALSE(PermCriterionLocal(f, 2, 2, DerivativeDomain::kAllResidues));
  EXPECT_TRUE(PermCriterionLocal(f, 2, 2, DerivativeDomain::kMaximalIdealOnly));
}

TEST(FuncspaceTest, DualCriterionMatchesPairOracle) {
  std::mt19937_64 rng(13);
  for (std::int64_t m : {2, 3, 4, 6, 8, 9}) {
    const Ring base = Ring::Modular(m);
    for (int t = 0; t < 400; ++t) {
      const auto c = testing::RandomCoeffs(rng, m, static_cast<unsigned>(2 * m - 1));
      ASSERT_EQ(PermCriterionDual(ToPoly(c), base), testing::IsDualPermMod(c, m)) << m;
    }
  }
}

TEST(FuncspaceTest, PointwiseAndComposition) {
  const Ring z5 = Ring::Modular(5);
  const FunctionTable f(z5, {1, 2, 3, 4, 0}), g(z5, {0, 2, 4, 1, 3});
  EXPECT_EQ(Compose(f, g).values(), (std::vector<Elem>{1, 3, 0, 2, 4}));
  EXPECT_EQ(Compose(InverseBijection(f), f), FunctionTable::Identity(z5));
  EXPECT_EQ(Pointwise(PointwiseOp::kMul, f, g).values(), (std::vector<Elem>{0, 4, 2, 4, 0}));
  EXPECT_THROW(InverseBijection(FunctionTable::Constant(z5, 1)), InvalidArgument);
  const FunctionTable u(z5, {1, 2, 3, 4, 1});
  EXPECT_EQ(Pointwise(PointwiseOp::kMul, u, InvertUnitTable(u)), FunctionTable::Constant(z5, 1));
  EXPECT_THROW(InvertUnitTable(f), InvalidArgument);
}

TEST(FuncspaceTest, LagrangeReproducesTables) {
  std::mt19937_64 rng(14);
  for (const Ring& field : {Ring::FiniteField(5), Ring::FiniteField(2, 2), Ring::FiniteField(3, 2)}) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(field.size() - 1));
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> v(field.size());
      for (auto& x : v) x = pick(rng);
      const FunctionTable table(field, v);
      const RingPoly l = Lagrange(table);
      EXPECT_LT(l.degree(), static_cast<int>(field.size()));
      EXPECT_EQ(Induce(l, field), table);
    }
  }
  EXPECT_THROW(Lagrange(FunctionTable::Identity(Ring::Modular(4))), InvalidArgument);
}

TEST(FuncspaceTest, RealizePairHitsBothParts) {
  const Ring f3 = Ring::FiniteField(3);
  const FunctionTable g(f3, {2, 0, 1}), f(f3, {1, 2, 2});
  const RingPoly h = RealizePair(g, f);
  EXPECT_EQ(Induce(h, f3), g);
  EXPECT_EQ(Induce(Derive(f3, h), f3), f);
}

TEST(FuncspaceTest, JsonRoundTrip) {
  const FunctionTable t(Ring::Parse("dual:zm:2"), {0, 3, 2, 1});
  const auto j = ToJson(t);
  EXPECT_EQ(j["ring"], "dual:zm:2");
  EXPECT_EQ(FunctionTableFromJson(j), t);
  EXPECT_ANY_THROW(FunctionTableFromJson(nlohmann::json{{"ring", "zm:2"}, {"values", {0, 5}}}));
}

}  // namespace
}  // namespace ringfunc
