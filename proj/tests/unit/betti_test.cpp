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

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tutteseq/betti.hpp"
#include "tutteseq/errors.hpp"
#include "tutteseq/orientation.hpp"
#include "tutteseq/tutte.hpp"

namespace tutteseq {
namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

IntPoly one_minus_t_power(int k) {
  IntPoly p{1};
  for (int i = 0; i < k; ++i) p = p * IntPoly{1, -1};
  return p;
}

TEST(Betti, TriangleTable) {
  auto t = betti_table(triangle(), 0);
  EXPECT_EQ(t.at(0, 0), 2);
  EXPECT_EQ(t.at(1, 1), 3);
  EXPECT_EQ(t.at(2, 3), 1);
  EXPECT_EQ(t.at(1, 0), 0);
  EXPECT_EQ(t.at(-1, 0), 0);
  EXPECT_EQ(t.entries.size(), 3U);
  EXPECT_EQ(t.signed_generating_polynomial(), (IntPoly{2, -3, 0, 1}));
  EXPECT_EQ(alternating_numbers(t, 3), (std::vector<std::int64_t>{2, -3, 0, 1}));
}

TEST(Betti, ZerothRowCountsUniqueSinkOrientations) {
  for (const auto& g : testing::generated_corpus(5, 7))
    EXPECT_EQ(betti_table(g, 0).at(0, g.loop_count()), static_cast<std::int64_t>(enumerate_unique_sink(g, 0).size()));
}

TEST(Betti, ConnectedPartitionsMatchBruteForce) {
  for (const auto& g : testing::generated_corpus(5, 7))
    for (int i = 0; i < g.vertex_count(); ++i) {
      auto fast = connected_partitions(g, i);
      auto slow = testing::brute_connected_partitions(g, i);
      EXPECT_EQ(fast.size(), slow.size()) << format_graph(g) << " i=" << i;
    }
}

TEST(Betti, SignedPolynomialFactorsThroughTutte) {
  for (const auto& g : testing::generated_corpus(5, 7))
    EXPECT_EQ(betti_table(g, 0).signed_generating_polynomial(),
              one_minus_t_power(g.vertex_count() - 1) * tutte_eval_1_t(g))
        << format_graph(g);
}

TEST(Betti, SerialParallelAgree) {
  for (const auto& g : testing::generated_corpus(5, 6))
    EXPECT_EQ(betti_table(g, 0, Execution::serial), betti_table(g, 0, Execution::parallel));
}

TEST(Betti, DeletionContractionGraphs) {
  auto dc = deletion_contraction(triangle(), 0, 1);
  EXPECT_EQ(dc.contracted.vertex_count(), 2);
  EXPECT_EQ(dc.deleted.nonloop_edge_count(), 2);
  EXPECT_EQ(dc.sink, 1);
  EXPECT_THROW(deletion_contraction(Multigraph(3, {{0, 1}, {1, 2}}), 0, 1), BridgeEdge);
}

TEST(Betti, AlternatingDeletionContractionHolds) {
  for (const auto& g : testing::generated_corpus(5, 7))
    for (auto [u, v] : g.adjacent_pairs()) {
      if (is_bridge(g, u, v)) continue;
      auto r = check_alt_deletion_contraction(g, u, v);
      EXPECT_TRUE(r.ok) << format_graph(g) << " e=" << u << "," << v;
      EXPECT_TRUE(r.zeroth_sum);
    }
}

TEST(Betti, VanishingImpliesEquality) {
  for (const auto& g : testing::generated_corpus(5, 7))
    for (auto [u, v] : g.adjacent_pairs()) {
      if (is_bridge(g, u, v)) continue;
      auto r = check_vanishing_implies_equality(g, u, v);
      EXPECT_TRUE(r.ok) << format_graph(g);
      EXPECT_TRUE(r.counterexamples.empty());
    }
}

}  // namespace
}  // namespace tutteseq
