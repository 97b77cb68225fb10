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
#include <optional>
#include <string>
#include <vector>

#include "tutteseq/module_map.hpp"
#include "tutteseq/parallel.hpp"

namespace tutteseq {

enum class SequenceKind { gpark, toppling };

std::string to_string(SequenceKind k);

struct DegreeFlags {
  bool complex = false;
  bool exact_middle = false;
  bool right_surjective = false;
  bool left_kernel_as_claimed = false;

  bool all() const { return complex && exact_middle && right_surjective && left_kernel_as_claimed; }
  friend bool operator==(const DegreeFlags&, const DegreeFlags&) = default;
};

/// One degree of 0 -> L -> M -> R -> 0. For gpark, L is GC_{G/e} / x12;
/// dim_ker_psi and dim_x12_left then refer to GC_{G/e} itself.
struct DegreeRow {
  int t = 0;
  std::int64_t dimL = 0, dimM = 0, dimR = 0;
  std::int64_t dim_im_psi = 0, dim_im_phi = 0, dim_ker_phi = 0;
  std::int64_t dim_ker_psi = 0;
  /// dim (x12 * left module)_t
  std::int64_t dim_x12_left = 0;
  DegreeFlags flags;
  bool kernel_strictly_larger = false;
  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

struct ExactnessReport {
  SequenceKind kind = SequenceKind::gpark;
  Vertex u = 0, v = 0, sink = 0;
  int max_degree = 0;
  std::vector<DegreeRow> rows;
  bool maps_well_defined = false;
  bool verdict = false;
  friend bool operator==(const ExactnessReport&, const ExactnessReport&) = default;
};

/// g + l + 3 of the middle graph.
int default_max_degree(const Multigraph& g);

/// Throws TooFewVertices (n < 3), BridgeEdge, SinkMismatch, NoSuchEdge.
ExactnessReport exactness_report(SequenceKind kind, const Multigraph& g, Vertex u, Vertex v, Vertex sink,
                                 std::optional<int> max_degree = std::nullopt,
                                 Execution exec = Execution::serial);

}  // namespace tutteseq
