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
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tutteseq/errors.hpp"
#include "tutteseq/orientation.hpp"
#include "tutteseq/tutte.hpp"

namespace tutteseq {
namespace {

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Multigraph c4() { return Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

TEST(Orientation, RejectsCyclesAndRepeats) {
  EXPECT_THROW(Orientation(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}), InvalidGraph);
  EXPECT_THROW(Orientation(2, {{0, 1, 1}, {1, 0, 1}}), InvalidGraph);
  EXPECT_THROW(Orientation(2, {{0, 0, 1}}), InvalidGraph);
}

TEST(Orientation, UniqueSinkCounts) {
  EXPECT_EQ(enumerate_unique_sink(triangle(), 1).size(), 2U);
  EXPECT_EQ(enumerate_unique_sink(c4(), 3).size(), 3U);
  Multigraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(enumerate_unique_sink(path, 1).size(), 1U);
  EXPECT_EQ(enumerate_acyclic(triangle()).size(), 6U);
}

TEST(Orientation, EnumerationMatchesBruteForceAndIsLexicographic) {
  for (const auto& g : testing::generated_corpus(4, 6)) {
    auto fast = enumerate_acyclic(g);
    auto slow = testing::brute_acyclic(g);
    std::vector<Orientation> a = fast, b = slow;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    for (const auto& o : fast) EXPECT_TRUE(o.orients(g));
  }
}

TEST(Orientation, UniqueSinkCountIsTutteOneZeroForEverySink) {
  for (const auto& g : testing::generated_corpus(5, 7)) {
    if (g.loop_count() > 0) continue;
    const BigInt t10 = tutte_eval(g, 1, 0);
    for (Vertex q = 0; q < g.vertex_count(); ++q)
      EXPECT_EQ(BigInt(enumerate_unique_sink(g, q).size()), t10) << format_graph(g);
  }
}

TEST(Orientation, DivisorOfTriangleOrientation) {
  Orientation a(3, {{0, 1, 1}, {2, 1, 1}, {0, 2, 1}});
  EXPECT_EQ(divisor_of(a), Divisor({1, -1, 0}));
  Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
  for (const auto& o : enumerate_acyclic(g)) EXPECT_EQ(divisor_of(o).degree(), 4 - 3);
  for (const auto& o : enumerate_unique_sink(g, 2)) EXPECT_EQ(divisor_of(o)[2], -1);
}

TEST(Orientation, ReversalIsAnInvolution) {
  for (const auto& a : enumerate_acyclic(c4()))
    for (Vertex v = 0; v < 4; ++v) {
      if (!a.is_source(v) && !a.is_sink(v)) {
        EXPECT_THROW(source_sink_reverse(a, v), NotSourceOrSink);
        continue;
      }
      EXPECT_EQ(source_sink_reverse(source_sink_reverse(a, v), v), a);
    }
}

TEST(Orientation, TriangleGeneratorsInequivalent) {
  auto gens = enumerate_unique_sink(triangle(), 1);
  ASSERT_EQ(gens.size(), 2U);
  EXPECT_FALSE(are_equivalent(gens[0], gens[1]));
  EXPECT_FALSE(reversal_reachable(gens[0], gens[1]));
  EXPECT_THROW(reversal_distance(gens[0], gens[1]), NotEquivalent);
}

TEST(Orientation, C4GeneratorsPairwiseInequivalent) {
  auto gens = enumerate_unique_sink(c4(), 3);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) EXPECT_FALSE(are_equivalent(gens[i], gens[j]));
}

TEST(Orientation, DivisorEquivalenceMatchesReversalSearch) {
  for (const auto& g : testing::generated_corpus(4, 6)) {
    auto all = enumerate_acyclic(g);
    for (const auto& a : all) {
      auto ball = testing::reversal_ball(a);
      for (const auto& b : all) {
        bool bfs = std::any_of(ball.begin(), ball.end(), [&](const auto& p) { return p.first == b; });
        EXPECT_EQ(are_equivalent(a, b), bfs);
        EXPECT_EQ(reversal_reachable(a, b), bfs);
      }
    }
  }
}

TEST(Orientation, ReversalDistanceIsAMetricOnClasses) {
  Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  auto all = enumerate_acyclic(g);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (!are_equivalent(a, b)) continue;
      int ab = reversal_distance(a, b);
      EXPECT_EQ(ab, reversal_distance(b, a));
      EXPECT_EQ(ab == 0, a == b);
      for (const auto& c : all)
        if (are_equivalent(a, c)) {
          EXPECT_LE(reversal_distance(a, c), ab + reversal_distance(b, c));
        }
    }
}

TEST(Orientation, ClassCountEqualsUniqueSinkCount) {
  for (const auto& g : testing::generated_corpus(4, 6)) {
    OrientationClassifier cls(g, 0);
    std::set<std::size_t> hit;
    for (const auto& a : enumerate_acyclic(g)) {
      auto c = cls.classify(a);
      EXPECT_TRUE(c.canonical.has_unique_sink_at(0));
      EXPECT_TRUE(are_equivalent(c.canonical, a));
      hit.insert(cls.index_of(a));
    }
    EXPECT_EQ(hit.size(), enumerate_unique_sink(g, 0).size());
  }
}

TEST(Orientation, CanonicalRepOfTriangleOrientationWithOtherSink) {
  // 1 -> 0, 1 -> 2, 0 -> 2: unique sink at vertex 2.
  Orientation a(3, {{1, 0, 1}, {1, 2, 1}, {0, 2, 1}});
  auto c = canonical_rep(a, 1);
  auto gens = enumerate_unique_sink(triangle(), 1);
  EXPECT_TRUE(std::find(gens.begin(), gens.end(), c.canonical) != gens.end());
  EXPECT_TRUE(reversal_reachable(a, c.canonical));
  EXPECT_EQ(canonical_rep(gens[0], 1).canonical, gens[0]);
}

TEST(Orientation, LiftsOnTriangle) {
  Multigraph dbl(2, {{0, 1}, {0, 1}});
  auto a = enumerate_unique_sink(dbl, 0).at(0);
  auto plus = lift_plus(a, triangle(), 0, 1);
  auto minus = lift_minus(a, triangle(), 0, 1);
  EXPECT_EQ(plus.to_string(), "0>1,2>0,2>1");
  EXPECT_EQ(minus.to_string(), "1>0,2>0,2>1");
  EXPECT_TRUE(plus.has_unique_sink_at(1));
  EXPECT_FALSE(minus.has_unique_sink_at(1));
  EXPECT_THROW(lift_plus(a, c4(), 0, 1), ShapeMismatch);
}

TEST(Orientation, RestrictContractOnTriangle) {
  auto gens = enumerate_unique_sink(triangle(), 1);
  // A_{e+} = 0>1,2>0,2>1 contracts along (0,1).
  Orientation eplus(3, {{0, 1, 1}, {2, 0, 1}, {2, 1, 1}});
  EXPECT_TRUE(restrict_contract(eplus, 0, 1).has_value());
  // Unique sink at 1 with an edge 0 -> 2 out of the other endpoint.
  Orientation eminus(3, {{0, 1, 1}, {0, 2, 1}, {2, 1, 1}});
  EXPECT_FALSE(restrict_contract(eminus, 0, 1).has_value());
}

TEST(Orientation, ContractionFailsWhenOtherEndpointPointsAway) {
  for (const auto& g : testing::generated_corpus(5, 7)) {
    if (g.vertex_count() < 3) continue;
    for (auto [a, b] : g.adjacent_pairs()) {
      for (const auto& o : enumerate_unique_sink(g, b)) {
        bool points_away = false;
        for (const Arc& arc : o.arcs()) points_away = points_away || (arc.from == a && arc.to != b);
        if (points_away) {
          EXPECT_FALSE(restrict_contract(o, a, b).has_value());
        }
      }
    }
  }
}

TEST(Orientation, RestrictDeleteDropsOrKeepsThePair) {
  Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
  for (const auto& o : enumerate_unique_sink(g, 1)) {
    auto d = restrict_delete(o, 0, 1);
    EXPECT_TRUE(d.orients(delete_edge(g, 0, 1)));
  }
  auto gens = enumerate_unique_sink(triangle(), 1);
  EXPECT_EQ(restrict_delete(gens[0], 0, 1).arcs().size(), 2U);
}

TEST(Orientation, LiftsInjectiveAndDeletionBijectiveOnMultiEdges) {
  Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
  auto ge = contract_edge(g, 0, 1).graph;
  std::set<Orientation> plus;
  for (const auto& a : enumerate_unique_sink(ge, 0)) plus.insert(lift_plus(a, g, 0, 1));
  EXPECT_EQ(plus.size(), enumerate_unique_sink(ge, 0).size());
  std::set<Orientation> del;
  for (const auto& a : enumerate_unique_sink(g, 1)) del.insert(restrict_delete(a, 0, 1));
  EXPECT_EQ(del.size(), enumerate_unique_sink(g, 1).size());
  EXPECT_EQ(del.size(), enumerate_unique_sink(delete_edge(g, 0, 1), 1).size());
}

TEST(Orientation, SerializationIsSorted) {
  Orientation a(3, {{2, 1, 1}, {0, 1, 1}, {0, 2, 1}});
  EXPECT_EQ(a.serialize(), (std::vector<std::string>{"0>1", "0>2", "2>1"}));
}

}  // namespace
}  // namespace tutteseq
