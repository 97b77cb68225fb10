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
#include <map>
#include <utility>
#include <vector>

#include "tutteseq/multigraph.hpp"
#include "tutteseq/parallel.hpp"
#include "tutteseq/poly.hpp"

namespace tutteseq {

/// beta_{i,k}, counted on connected partition graphs. m is the non-loop
/// edge count; k = (m - edges of the partition graph) + loops.
struct BettiTable {
  int n = 0;
  int m = 0;
  int loops = 0;
  Vertex sink = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;

  /// Zero outside the stored support, including negative indices.
  std::int64_t at(int i, int k) const;
  int max_k() const { return m + loops; }
  /// sum over (i, k) of (-1)^i beta_{i,k} t^k
  IntPoly signed_generating_polynomial() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

BettiTable betti_table(const Multigraph& h, Vertex sink, Execution exec = Execution::serial);

/// A_k = sum_i (-1)^i beta_{i,k} for k = 0..K.
std::vector<std::int64_t> alternating_numbers(const BettiTable& t, int K);
std::vector<std::int64_t> alternating_numbers(const Multigraph& h, Vertex sink, int K);

/// The three graphs of a deletion-contraction step along the pair (u, v),
/// with sink v carried through. Throws BridgeEdge.
struct DeletionContraction {
  Multigraph g;
  Multigraph contracted;
  Multigraph deleted;
  Vertex sink = 0;
  Vertex contracted_sink = 0;
};
DeletionContraction deletion_contraction(const Multigraph& g, Vertex u, Vertex v);

struct AltDcRow {
  int k = 0;
  std::int64_t a_g = 0, a_contracted = 0, a_contracted_prev = 0, a_deleted = 0;
  bool holds = false;
};

struct AltDcReport {
  std::vector<AltDcRow> rows;
  /// A_0(G) = A_0(G/e) + A_0(G\e).
  bool zeroth_sum = false;
  bool ok = false;
};

/// A_k(G) + A_{k-1}(G/e) = A_k(G/e) + A_k(G\e) for every k in the support.
AltDcReport check_alt_deletion_contraction(const Multigraph& g, Vertex u, Vertex v);

struct VanishingInstance {
  int i = 0;
  int j = 0;
  std::int64_t beta_g = 0;
  std::int64_t beta_deleted = 0;
};

struct VanishingReport {
  /// Indices where the hypothesis on G/e holds.
  std::vector<VanishingInstance> instances;
  std::vector<VanishingInstance> counterexamples;
  bool ok = false;
};

/// Wherever beta_{i,j}, beta_{i-1,j-1}, beta_{i-1,j}, beta_{i-2,j-1} of G/e
/// all vanish, beta_{i,j}(G) must equal beta_{i,j}(G\e).
VanishingReport check_vanishing_implies_equality(const Multigraph& g, Vertex u, Vertex v);

}  // namespace tutteseq
