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

#include <set>

#include "tutteseq/errors.hpp"
#include "tutteseq/module_map.hpp"

namespace tutteseq {
namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Multigraph c4() { return Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

TEST(ModuleMap, EdgeSetupShape) {
  auto s = edge_setup(triangle(), 0, 1, 1);
  EXPECT_EQ(s.other, 0);
  EXPECT_EQ(s.sink, 1);
  EXPECT_EQ(s.contracted.vertex_count(), 2);
  EXPECT_EQ(s.deleted.nonloop_edge_count(), 2);
  EXPECT_EQ(s.multiplicity, 1);
  EXPECT_EQ(s.merged_var, s.contracted_sink);
  EXPECT_THROW(edge_setup(triangle(), 0, 1, 2), SinkMismatch);
  EXPECT_THROW(edge_setup(Multigraph(3, {{0, 1}, {1, 2}}), 0, 1, 1), BridgeEdge);
  EXPECT_THROW(edge_setup(c4(), 0, 2, 2), NoSuchEdge);
}

TEST(ModuleMap, ParallelEdgesLeaveLoops) {
  auto s = edge_setup(Multigraph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {0, 2}}), 0, 1, 1);
  EXPECT_EQ(s.multiplicity, 3);
  EXPECT_EQ(s.contracted.loop_count(), 2);
}

TEST(ModuleMap, TriangleMapsWellDefined) {
  auto s = edge_setup(triangle(), 0, 1, 1);
  for (const auto& ms : {build_psi0(s), build_phi0(s), build_psi1(s), build_phi1(s)}) {
    EXPECT_TRUE(degree_preserving(ms)) << ms.name;
    EXPECT_EQ(ms.images.size(), ms.source.generators.size()) << ms.name;
  }
  EXPECT_TRUE(verify_map_spec(build_phi0(s), 4));
  EXPECT_TRUE(verify_map_spec(build_phi1(s), 4));
  EXPECT_TRUE(verify_map_spec(build_psi1(s), 4));
  EXPECT_TRUE(verify_map_spec(quotient_source(build_psi0(s), s.merged_var), 4));
}

TEST(ModuleMap, FourCycleToppling) {
  auto s = edge_setup(c4(), 0, 3, 3);
  auto psi = build_psi1(s);
  auto phi = build_phi1(s);
  ASSERT_EQ(psi.source.generators.size(), 2U);
  ASSERT_EQ(psi.target.generators.size(), 3U);
  std::set<std::uint32_t> a, b;
  for (const auto& t : psi.images[0]) a.insert(t.gen);
  for (const auto& t : psi.images[1]) b.insert(t.gen);
  EXPECT_EQ(a.size(), 2U);
  EXPECT_EQ(b.size(), 2U);
  std::size_t shared = 0;
  for (auto x : a) shared += b.count(x);
  EXPECT_EQ(shared, 1U);
  ASSERT_EQ(phi.target.generators.size(), 1U);
  for (const auto& img : phi.images) {
    ASSERT_EQ(img.size(), 1U);
    EXPECT_EQ(img[0].gen, 0U);
  }
}

TEST(ModuleMap, CorruptedMapIsRejected) {
  auto s = edge_setup(Multigraph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {0, 2}}), 0, 1, 1);
  auto good = quotient_source(build_psi0(s), s.merged_var);
  ASSERT_TRUE(verify_map_spec(good, 5));
  ASSERT_GE(good.target.generators.size(), 2U);
  bool caught = false;
  for (std::size_t i = 0; i < good.images.size() && !caught; ++i) {
    auto bad = good;
    for (auto& t : bad.images[i]) t.gen = (t.gen + 1) % static_cast<std::uint32_t>(bad.target.generators.size());
    caught = !verify_map_spec(bad, 5);
  }
  EXPECT_TRUE(caught);
}

TEST(ModuleMap, ApplyIsLinear) {
  auto s = edge_setup(triangle(), 0, 1, 1);
  auto psi = build_psi1(s);
  std::vector<Term> x{{Monomial{}, 0}}, twice{{Monomial{}, 0}, {Monomial{}, 0}};
  EXPECT_FALSE(apply_map(psi, x).empty() && !psi.images[0].empty());
  EXPECT_TRUE(apply_map(psi, twice).empty());
}

}  // namespace
}  // namespace tutteseq
