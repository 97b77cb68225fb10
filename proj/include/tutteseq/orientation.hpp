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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tutteseq/divisor.hpp"
#include "tutteseq/multigraph.hpp"

namespace tutteseq {

/// All `multiplicity` parallel edges between from and to, pointing from -> to.
struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  int multiplicity = 1;

  Vertex lo() const { return from < to ? from : to; }
  Vertex hi() const { return from < to ? to : from; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Acyclic orientation: one direction per adjacent vertex pair. Loops carry
/// no direction and are not stored.
class Orientation {
 public:
  /// Throws InvalidGraph if arcs repeat a pair, leave the vertex range or
  /// contain a directed cycle.
  Orientation(int n, std::vector<Arc> arcs);

  /// reversed[i] set means the i-th adjacent pair (a < b) points b -> a.
  static Orientation from_directions(const Multigraph& g, const std::vector<char>& reversed);

  int vertex_count() const { return n_; }
  /// Sorted by (lo, hi).
  const std::vector<Arc>& arcs() const { return arcs_; }

  int out_multiplicity(Vertex v) const;
  bool is_source(Vertex v) const;
  bool is_sink(Vertex v) const;
  std::vector<Vertex> sinks() const;
  bool has_unique_sink_at(Vertex q) const;
  /// Source endpoint of the pair {u, v}, if adjacent.
  std::optional<Vertex> source_of(Vertex u, Vertex v) const;

  /// True when the pairs and multiplicities are those of g's loopless part.
  bool orients(const Multigraph& g) const;
  /// The loopless multigraph underneath.
  Multigraph host() const;

  /// One "u>v" string per pair, sorted lexicographically.
  std::vector<std::string> serialize() const;
  std::string to_string() const;

  friend auto operator<=>(const Orientation&, const Orientation&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

/// Lexicographic over the per-pair direction vector (low -> high first).
std::vector<Orientation> enumerate_acyclic(const Multigraph& g);
std::vector<Orientation> enumerate_unique_sink(const Multigraph& g, Vertex q);

/// D(v) = out-multiplicity(v) - 1.
Divisor divisor_of(const Orientation& a);

/// Flip every pair at a source or sink v. Throws NotSourceOrSink.
Orientation source_sink_reverse(const Orientation& a, Vertex v);

/// Linear equivalence of the associated divisors.
bool are_equivalent(const Orientation& a, const Orientation& b);
/// Reachability by source-sink reversals (breadth-first search).
bool reversal_reachable(const Orientation& a, const Orientation& b);
/// Fewest reversals from a to b. Throws NotEquivalent.
int reversal_distance(const Orientation& a, const Orientation& b);

struct OrientationClass {
  Orientation canonical;
  Vertex sink = 0;
};

/// Lookup from q-reduced divisors to unique-sink orientations. Read-only
/// after construction.
class OrientationClassifier {
 public:
  OrientationClassifier(const Multigraph& g, Vertex q);

  Vertex sink() const { return chip_.base(); }
  std::size_t size() const { return reps_.size(); }
  /// Unique-sink-at-q orientations sorted by serialization.
  const std::vector<Orientation>& representatives() const { return reps_; }
  std::size_t index_of(const Orientation& a) const;
  OrientationClass classify(const Orientation& a) const;

 private:
  ChipFiring chip_;
  std::vector<Orientation> reps_;
  std::map<Divisor, std::size_t> table_;
};

/// The unique-sink-at-q orientation equivalent to a.
OrientationClass canonical_rep(const Orientation& a, Vertex q);

/// a lives on G/e for e = (u, v); orient every edge between u and v with u
/// as the source (lift_plus) or v as the source (lift_minus).
Orientation lift_plus(const Orientation& a, const Multigraph& g, Vertex u, Vertex v);
Orientation lift_minus(const Orientation& a, const Multigraph& g, Vertex u, Vertex v);

/// Drop one edge between u and v; the pair disappears when it was simple.
Orientation restrict_delete(const Orientation& a, Vertex u, Vertex v);

/// Merge u and v (relabeled as in merge_relabel), dropping the edges between
/// them. Empty when the result has a directed cycle.
std::optional<Orientation> restrict_contract(const Orientation& a, Vertex u, Vertex v);

/// Orders orientations by serialize().
bool serialization_less(const Orientation& a, const Orientation& b);

}  // namespace tutteseq
