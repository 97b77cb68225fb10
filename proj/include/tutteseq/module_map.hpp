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

#include <string>
#include <vector>

#include "tutteseq/multigraph.hpp"
#include "tutteseq/presentation.hpp"

namespace tutteseq {

/// The graphs of one Tutte sequence step along e = (other, sink).
struct EdgeSetup {
  Multigraph g;
  Multigraph contracted;  // G/e, m_e - 1 loops
  Multigraph deleted;     // G\e
  Vertex other = 0;
  Vertex sink = 0;
  Vertex contracted_sink = 0;
  /// Index of x_{1,2} among the n - 1 variables of R_e.
  int merged_var = 0;
  int multiplicity = 1;
};

/// Throws NoSuchEdge, SinkMismatch (sink not on e) or BridgeEdge.
EdgeSetup edge_setup(const Multigraph& g, Vertex u, Vertex v, Vertex sink);

/// Module map given on generators; images[i] is the image of source
/// generator i in target terms.
struct MapSpec {
  std::string name;
  ModulePresentation source;
  ModulePresentation target;
  std::vector<std::vector<Term>> images;
};

/// Image of a source element.
std::vector<Term> apply_map(const MapSpec& ms, const std::vector<Term>& element);

/// Every image term has its source generator's degree.
bool degree_preserving(const MapSpec& ms);

/// False unless degree preserving. Every source relation of degree <= max_degree maps into the target's
/// relation span, each homogeneous component checked at its own degree.
bool verify_map_spec(const MapSpec& ms, int max_degree);

/// Same map, source replaced by source / x_var source.
MapSpec quotient_source(const MapSpec& ms, int var);

/// A -> x12^(m_e - 1) A_{e+} from GC_{G/e} to GC_G (x) R_e.
MapSpec build_psi0(const EdgeSetup& s);
/// A' -> 0 when m_e = 1 and e contracts acyclically, else A' \ e.
MapSpec build_phi0(const EdgeSetup& s);
/// [A] -> x12^(m_e - 1) ([A_{e+}] + [A_{e-}]) from C_{G/e} to C_G (x) R_e.
MapSpec build_psi1(const EdgeSetup& s);
/// [A'] -> [A' \ e].
MapSpec build_phi1(const EdgeSetup& s);

}  // namespace tutteseq
