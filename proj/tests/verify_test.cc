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

#include "gtest/gtest.h"

namespace ringfunc {
namespace {

TEST(VerifyTest, EverySuitePasses) {
  for (Suite s : {Suite::kDual, Suite::kGroups, Suite::kCanonical, Suite::kCounting}) {
    const VerifyReport report = RunVerification(s, 27);
    EXPECT_FALSE(report.checks.empty());
    EXPECT_TRUE(report.passed()) << report.ToText();
  }
}

TEST(VerifyTest, MaxSizeLimitsTheGrid) {
  const VerifyReport report = RunVerification(Suite::kGroups, 9);
  EXPECT_TRUE(report.passed());
  for (const auto& c : report.checks) {
    EXPECT_EQ(c.name.find("fq:2,2"), std::string::npos) << c.name;
    EXPECT_EQ(c.name.find("zm:4"), std::string::npos) << c.name;
  }
  EXPECT_NE(report.ToText().find("fq:3"), std::string::npos);
}

TEST(VerifyTest, ReportFormats) {
  const VerifyReport report = RunVerification(Suite::kCounting, 4);
  const auto j = report.ToJson();
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), report.checks.size());
  EXPECT_NE(report.ToText().find("checks passed"), std::string::npos);
}

TEST(VerifyTest, ParseSuite) {
  EXPECT_EQ(ParseSuite("groups"), Suite::kGroups);
  EXPECT_THROW(ParseSuite("everything"), InvalidArgument);
}

}  // namespace
}  // namespace ringfunc
