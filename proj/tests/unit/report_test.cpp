// Copyright 2026 The tutteseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "tutteseq/report.hpp"

namespace tutteseq {
namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(Report, Polynomials) {
  EXPECT_EQ(to_json(IntPoly{2, 1}).dump(), "[2,1]");
  EXPECT_EQ(to_json(tutte_polynomial(triangle())).dump(), R"([[0,1,"1"],[1,0,"1"],[2,0,"1"]])");
  EXPECT_EQ(to_json(HilbertData({2, 3, 3}))["k_polynomial"].dump(), "[2,1]");
}

TEST(Report, BettiTriples) {
  EXPECT_EQ(to_json(betti_table(triangle(), 0)).dump(), "[[0,0,2],[1,1,3],[2,3,1]]");
}

TEST(Report, ExactnessSchema) {
  auto j = to_json(exactness_report(SequenceKind::gpark, triangle(), 0, 1, 1));
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["kind"], "gpark");
  EXPECT_EQ(j["edge"].dump(), "[0,1]");
  EXPECT_EQ(j["per_degree"].size(), 5U);
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_TRUE(j["per_degree"][0]["flags"]["exact_middle"].get<bool>());
}

TEST(Report, OrientationAndDivisor) {
  Orientation a(3, {{0, 1, 1}, {2, 1, 1}});
  EXPECT_EQ(to_json(a).dump(), R"(["0>1","2>1"])");
  EXPECT_EQ(to_json(divisor_of(a)).dump(), "[0,-1,0]");
}

}  // namespace
}  // namespace tutteseq
