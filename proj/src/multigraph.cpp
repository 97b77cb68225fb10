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

#include "tutteseq/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tutteseq/errors.hpp"

namespace tutteseq {

namespace {

bool connected_on(int n, const std::vector<Edge>& edges, const std::vector<Vertex>& subset) {
  if (subset.size() <= 1) return true;
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : subset) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  std::size_t components = subset.size();
  for (const Edge& e : edges) {
    if (e.is_loop() || !in[static_cast<std::size_t>(e.u)] || !in[static_cast<std::size_t>(e.v)]) continue;
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

void check_pair(const Multigraph& g, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw NoSuchEdge("vertex index out of range");
  if (u == v) throw SameVertex("edge endpoints coincide: " + std::to_string(u));
  if (g.multiplicity(u, v) == 0)
    throw NoSuchEdge("no edge between " + std::to_string(u) + " and " + std::to_string(v));
}

Surgery merge(const Multigraph& g, Vertex u, Vertex v, bool keep_parallel_as_loops) {
  check_pair(g, u, v);
  auto relabel = merge_relabel(g.vertex_count(), u, v);
  std::vector<Edge> edges;
  bool skipped_one = false;
  for (const Edge& e : g.edges()) {
    if (e == Edge(u, v)) {
      if (!keep_parallel_as_loops) continue;
      if (!skipped_one) {
        skipped_one = true;
        continue;
      }
    }
    edges.emplace_back(relabel[static_cast<std::size_t>(e.u)], relabel[static_cast<std::size_t>(e.v)]);
  }
  return {Multigraph(g.vertex_count() - 1, std::move(edges)), std::move(relabel)};
}

}  // namespace

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidGraph("a graph needs at least one vertex");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n_)
      throw InvalidGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has an endpoint outside 0.." + std::to_string(n_ - 1));
    if (e.is_loop()) ++loops_;
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> all(static_cast<std::size_t>(n_));
  std::iota(all.begin(), all.end(), 0);
  if (!connected_on(n_, edges_, all)) throw DisconnectedGraph("graph is not connected");
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  const Edge key(u, v);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<int>(hi - lo);
}

int Multigraph::valence(Vertex v) const {
  int d = 0;
  for (const Edge& e : edges_)
    if (!e.is_loop() && (e.u == v || e.v == v)) ++d;
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Multigraph::adjacent_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    if (out.empty() || out.back() != std::pair{e.u, e.v}) out.emplace_back(e.u, e.v);
  }
  return out;
}

Multigraph Multigraph::without_loops() const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_)
    if (!e.is_loop()) kept.push_back(e);
  return Multigraph(n_, std::move(kept));
}

std::vector<Vertex> merge_relabel(int n, Vertex u, Vertex v) {
  const Vertex lo = std::min(u, v), hi = std::max(u, v);
  std::vector<Vertex> relabel(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w) relabel[static_cast<std::size_t>(w)] = w == hi ? lo : (w > hi ? w - 1 : w);
  return relabel;
}

Surgery contract_edge(const Multigraph& g, Vertex u, Vertex v) { return merge(g, u, v, true); }

Surgery contract_pair(const Multigraph& g, Vertex u, Vertex v) { return merge(g, u, v, false); }

Multigraph delete_edge(const Multigraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  std::vector<Edge> edges = g.edges();
  edges.erase(std::find(edges.begin(), edges.end(), Edge(u, v)));
  return Multigraph(g.vertex_count(), std::move(edges));
}

VertexPartition::VertexPartition(std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidPartition("empty block");
    std::sort(b.begin(), b.end());
    total += b.size();
  }
  std::sort(blocks_.begin(), blocks_.end());
  block_of_.assign(total, -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (Vertex v : blocks_[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= total || block_of_[static_cast<std::size_t>(v)] != -1)
        throw InvalidPartition("blocks must be disjoint and cover 0..n-1");
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
}

std::vector<VertexPartition> connected_partitions(const Multigraph& g, int i) {
  const int n = g.vertex_count();
  std::vector<VertexPartition> out;
  if (i < 0 || i > n - 1) return out;
  const int target_blocks = n - i;
  // Restricted growth strings: rgs[0] = 0, rgs[k] <= 1 + max(rgs[0..k-1]).
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(target_blocks));
    for (Vertex v = 0; v < n; ++v) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])].push_back(v);
    for (const auto& b : blocks)
      if (!connected_on(n, g.edges(), b)) return;
    out.emplace_back(std::move(blocks));
  };
  // Depth-first over positions 1..n-1, pruning when the block budget is exceeded
  // or can no longer be reached.
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      if (used == target_blocks) emit();
      return;
    }
    for (int b = 0; b <= used && b < target_blocks; ++b) {
      int now_used = b == used ? used + 1 : used;
      if (now_used + (n - pos - 1) < target_blocks) continue;
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, now_used);
    }
  };
  rec(rec, 1, 1);
  return out;
}

Multigraph partition_graph(const Multigraph& g, const VertexPartition& p) {
  if (static_cast<int>(p.block_count() + p.size()) != g.vertex_count())
    throw InvalidPartition("partition does not cover the graph's vertices");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = p.block_of(e.u), b = p.block_of(e.v);
    if (a != b) edges.emplace_back(a, b);
  }
  return Multigraph(p.block_count(), std::move(edges));
}

bool is_bridge(const Multigraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (g.multiplicity(u, v) > 1) return false;
  std::vector<Edge> rest;
  for (const Edge& e : g.edges())
    if (!(e == Edge(u, v))) rest.push_back(e);
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return !connected_on(g.vertex_count(), rest, all);
}

std::vector<std::vector<std::int64_t>> laplacian(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::int64_t>> q(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    auto a = static_cast<std::size_t>(e.u), b = static_cast<std::size_t>(e.v);
    ++q[a][a];
    ++q[b][b];
    --q[a][b];
    --q[b][a];
  }
  return q;
}

BigInt spanning_tree_count(const Multigraph& g, Vertex removed) {
  const int n = g.vertex_count();
  if (removed < 0 || removed >= n) throw InvalidGraph("removed vertex out of range");
  if (n == 1) return 1;
  auto q = laplacian(g);
  const auto k = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
  for (std::size_t i = 0, ri = 0; i < static_cast<std::size_t>(n); ++i) {
    if (static_cast<int>(i) == removed) continue;
    for (std::size_t j = 0, rj = 0; j < static_cast<std::size_t>(n); ++j) {
      if (static_cast<int>(j) == removed) continue;
      m[ri][rj++] = q[i][j];
    }
    ++ri;
  }
  // Fraction-free Bareiss elimination.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && m[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      m[i][p] = 0;
    }
    prev = m[p][p];
  }
  BigInt det = m[k - 1][k - 1] * sign;
  return det < 0 ? BigInt(-det) : det;
}

}  // namespace tutteseq
