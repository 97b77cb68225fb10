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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tutteseq/poly.hpp"

namespace tutteseq {

using Vertex = int;

/// Undirected edge stored with u <= v; u == v is a loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Connected undirected multigraph on vertices 0..n-1 with loops allowed.
/// The edge multiset is kept sorted, so equality is labeled equality.
class Multigraph {
 public:
  /// Throws InvalidGraph on out-of-range endpoints and DisconnectedGraph if
  /// the graph is not connected.
  Multigraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int loop_count() const { return loops_; }
  int nonloop_edge_count() const { return static_cast<int>(edges_.size()) - loops_; }
  /// Cycle rank of the loopless part: m - n + 1.
  int genus() const { return nonloop_edge_count() - n_ + 1; }

  /// Number of parallel edges between u and v (loops when u == v).
  int multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return u != v && multiplicity(u, v) > 0; }
  /// Non-loop valence.
  int valence(Vertex v) const;
  /// Distinct adjacent pairs (a, b) with a < b, sorted.
  std::vector<std::pair<Vertex, Vertex>> adjacent_pairs() const;

  /// Same vertex set, loops removed.
  Multigraph without_loops() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  int loops_ = 0;
};

/// Result of a surgery that merges two vertices. relabel[old] is the new
/// index: the merged vertex takes the smaller index and every other vertex
/// moves down past the removed larger index.
struct Surgery {
  Multigraph graph;
  std::vector<Vertex> relabel;
};

/// The relabeling used by every vertex merge.
std::vector<Vertex> merge_relabel(int n, Vertex u, Vertex v);

/// G/e: merge u and v, turning the other m_uv - 1 parallel copies into loops.
Surgery contract_edge(const Multigraph& g, Vertex u, Vertex v);

/// G\e: remove one copy of (u, v). Throws DisconnectedGraph on a bridge.
Multigraph delete_edge(const Multigraph& g, Vertex u, Vertex v);

/// G/(u,v): merge u and v, dropping every edge between them.
Surgery contract_pair(const Multigraph& g, Vertex u, Vertex v);

/// Set partition of the vertices; blocks sorted internally and ordered by
/// their smallest element.
class VertexPartition {
 public:
  explicit VertexPartition(std::vector<std::vector<Vertex>> blocks);

  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(Vertex v) const { return block_of_.at(static_cast<std::size_t>(v)); }
  /// Number of merges: n - block_count.
  int size() const { return static_cast<int>(block_of_.size()) - block_count(); }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<int> block_of_;
};

/// All partitions into n - i connected blocks, in restricted-growth-string
/// order.
std::vector<VertexPartition> connected_partitions(const Multigraph& g, int i);

/// Quotient graph: one vertex per block, inter-block edges kept with
/// multiplicity, intra-block edges and loops discarded.
Multigraph partition_graph(const Multigraph& g, const VertexPartition& p);

bool is_bridge(const Multigraph& g, Vertex u, Vertex v);

/// Q = D - A of the loopless part.
std::vector<std::vector<std::int64_t>> laplacian(const Multigraph& g);

/// |det| of the Laplacian with row and column `removed` deleted.
BigInt spanning_tree_count(const Multigraph& g, Vertex removed = 0);

/// Text format: first line n, then one "u v" line per edge; '#' comments.
Multigraph parse_graph(const std::string& text);
Multigraph read_graph_file(const std::string& path);
std::string format_graph(const Multigraph& g);

}  // namespace tutteseq
