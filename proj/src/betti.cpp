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

#include "tutteseq/betti.hpp"

#include "tutteseq/errors.hpp"
#include "tutteseq/orientation.hpp"

namespace tutteseq {

std::int64_t BettiTable::at(int i, int k) const {
  auto it = entries.find({i, k});
  return it == entries.end() ? 0 : it->second;
}

IntPoly BettiTable::signed_generating_polynomial() const {
  IntPoly p;
  for (const auto& [ik, b] : entries) p += IntPoly::monomial(ik.second, ik.first % 2 ? -b : b);
  return p;
}

BettiTable betti_table(const Multigraph& h, Vertex sink, Execution exec) {
  if (sink < 0 || sink >= h.vertex_count()) throw InvalidGraph("sink out of range");
  BettiTable t;
  t.n = h.vertex_count();
  t.m = h.nonloop_edge_count();
  t.loops = h.loop_count();
  t.sink = sink;
  for (int i = 0; i < t.n; ++i) {
    const auto parts = connected_partitions(h, i);
    std::vector<int> k_of(parts.size(), 0);
    std::vector<std::int64_t> count(parts.size(), 0);
    auto work = [&](std::size_t p) {
      Multigraph pg = partition_graph(h, parts[p]);
      k_of[p] = t.m - pg.nonloop_edge_count() + t.loops;
      count[p] = static_cast<std::int64_t>(enumerate_unique_sink(pg, parts[p].block_of(sink)).size());
    };
    const auto np = static_cast<std::int64_t>(parts.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t p = 0; p < np; ++p) work(static_cast<std::size_t>(p));
    } else {
      for (std::int64_t p = 0; p < np; ++p) work(static_cast<std::size_t>(p));
    }
    for (std::size_t p = 0; p < parts.size(); ++p)
      if (count[p]) t.entries[{i, k_of[p]}] += count[p];
  }
  return t;
}

std::vector<std::int64_t> alternating_numbers(const BettiTable& t, int K) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(K + 1), 0);
  for (const auto& [ik, b] : t.entries)
    if (ik.second <= K) a[static_cast<std::size_t>(ik.second)] += ik.first % 2 ? -b : b;
  return a;
}

std::vector<std::int64_t> alternating_numbers(const Multigraph& h, Vertex sink, int K) {
  return alternating_numbers(betti_table(h, sink), K);
}

DeletionContraction deletion_contraction(const Multigraph& g, Vertex u, Vertex v) {
  if (is_bridge(g, u, v))
    throw BridgeEdge("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a bridge");
  auto c = contract_edge(g, u, v);
  return {g, std::move(c.graph), delete_edge(g, u, v), v, c.relabel[static_cast<std::size_t>(v)]};
}

AltDcReport check_alt_deletion_contraction(const Multigraph& g, Vertex u, Vertex v) {
  auto dc = deletion_contraction(g, u, v);
  const int K = g.nonloop_edge_count() + g.loop_count() + 1;
  auto ag = alternating_numbers(dc.g, dc.sink, K);
  auto ac = alternating_numbers(dc.contracted, dc.contracted_sink, K);
  auto ad = alternating_numbers(dc.deleted, dc.sink, K);
  AltDcReport r;
  r.ok = true;
  for (int k = 0; k <= K; ++k) {
    auto sk = static_cast<std::size_t>(k);
    AltDcRow row{k, ag[sk], ac[sk], k ? ac[sk - 1] : 0, ad[sk], false};
    row.holds = row.a_g + row.a_contracted_prev == row.a_contracted + row.a_deleted;
    r.ok = r.ok && row.holds;
    r.rows.push_back(row);
  }
  r.zeroth_sum = ag[0] == ac[0] + ad[0];
  r.ok = r.ok && r.zeroth_sum;
  return r;
}

VanishingReport check_vanishing_implies_equality(const Multigraph& g, Vertex u, Vertex v) {
  auto dc = deletion_contraction(g, u, v);
  auto bg = betti_table(dc.g, dc.sink);
  auto bc = betti_table(dc.contracted, dc.contracted_sink);
  auto bd = betti_table(dc.deleted, dc.sink);
  VanishingReport r;
  r.ok = true;
  for (int i = 0; i <= bg.n; ++i) {
    for (int j = 0; j <= bg.max_k() + 2; ++j) {
      bool hyp = bc.at(i, j) == 0 && bc.at(i - 1, j - 1) == 0 && bc.at(i - 1, j) == 0 && bc.at(i - 2, j - 1) == 0;
      if (!hyp) continue;
      VanishingInstance in{i, j, bg.at(i, j), bd.at(i, j)};
      r.instances.push_back(in);
      if (in.beta_g != in.beta_deleted) {
        r.counterexamples.push_back(in);
        r.ok = false;
      }
    }
  }
  return r;
}

}  // namespace tutteseq
