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

#include "tutteseq/exactness.hpp"

#include "tutteseq/errors.hpp"

namespace tutteseq {

std::string to_string(SequenceKind k) { return k == SequenceKind::gpark ? "gpark" : "toppling"; }

int default_max_degree(const Multigraph& g) { return g.genus() + g.loop_count() + 3; }

namespace {

// Rank gained by adding the rows to a copy of the relation span.
std::int64_t image_dim(const GradedPiece& target, const std::vector<SparseRow>& rows) {
  SparseEchelon span = target.relations();
  std::int64_t gained = 0;
  for (const auto& r : rows)
    if (span.insert(r)) ++gained;
  return gained;
}

DegreeRow check_degree(SequenceKind kind, const MapSpec& psi, const MapSpec& phi, const ModulePresentation& left,
                       const ModulePresentation& raw_left, int merged_var, int t) {
  GradedPiece L(left, t), M(psi.target, t), R(phi.target, t);
  DegreeRow row;
  row.t = t;
  row.dimL = static_cast<std::int64_t>(L.dim());
  row.dimM = static_cast<std::int64_t>(M.dim());
  row.dimR = static_cast<std::int64_t>(R.dim());

  std::vector<SparseRow> psi_rows, phi_rows;
  bool complex = true;
  for (const Term& b : L.basis()) {
    auto img = apply_map(psi, {b});
    psi_rows.push_back(M.row(img));
    complex = complex && R.relations().contains(R.row(apply_map(phi, img)));
  }
  for (const Term& b : M.basis()) phi_rows.push_back(R.row(apply_map(phi, {b})));
  row.dim_im_psi = image_dim(M, psi_rows);
  row.dim_im_phi = image_dim(R, phi_rows);
  row.dim_ker_phi = row.dimM - row.dim_im_phi;

  row.flags.complex = complex;
  row.flags.exact_middle = row.dim_im_psi == row.dim_ker_phi;
  row.flags.right_surjective = row.dim_im_phi == row.dimR;

  const LinearForm x12{{merged_var}};
  if (kind == SequenceKind::gpark) {
    // psi0 is injective on the quotient and its kernel on GC_{G/e} has the
    // size of x12 * GC_{G/e}, with x12 a non-zero divisor there.
    const auto raw_t = static_cast<std::int64_t>(graded_dim(raw_left, t));
    const auto raw_prev = t > 0 ? static_cast<std::int64_t>(graded_dim(raw_left, t - 1)) : 0;
    const bool nzd = t == 0 || nzd_at(raw_left, x12, t - 1);
    row.dim_ker_psi = raw_t - row.dim_im_psi;
    row.dim_x12_left = raw_prev;
    row.flags.left_kernel_as_claimed = row.dim_im_psi == row.dimL && row.dim_ker_psi == raw_prev && nzd;
  } else {
    // x12 * C_{G/e} sits inside ker psi1; the kernel may be larger.
    const auto quotient_t = static_cast<std::int64_t>(graded_dim(quotient_by_generator_multiples(left, merged_var), t));
    row.dim_ker_psi = row.dimL - row.dim_im_psi;
    row.dim_x12_left = row.dimL - quotient_t;
    bool contained = true;
    if (t > 0) {
      GradedPiece prev(left, t - 1);
      for (const Term& b : prev.basis()) {
        Term shifted{b.mono * Monomial::variable(merged_var), b.gen};
        contained = contained && M.relations().contains(M.row(apply_map(psi, {shifted})));
      }
    }
    row.flags.left_kernel_as_claimed = contained && row.dim_ker_psi >= row.dim_x12_left;
    row.kernel_strictly_larger = row.dim_ker_psi > row.dim_x12_left;
  }
  return row;
}

}  // namespace

ExactnessReport exactness_report(SequenceKind kind, const Multigraph& g, Vertex u, Vertex v, Vertex sink,
                                 std::optional<int> max_degree, Execution exec) {
  if (g.vertex_count() < 3) throw TooFewVertices("the sequence needs at least three vertices");
  const EdgeSetup s = edge_setup(g, u, v, sink);
  const int D = max_degree.value_or(default_max_degree(g));

  ExactnessReport rep;
  rep.kind = kind;
  rep.u = u;
  rep.v = v;
  rep.sink = sink;
  rep.max_degree = D;

  MapSpec psi = kind == SequenceKind::gpark ? build_psi0(s) : build_psi1(s);
  MapSpec phi = kind == SequenceKind::gpark ? build_phi0(s) : build_phi1(s);
  const ModulePresentation raw_left = psi.source;
  bool ok = degree_preserving(psi) && degree_preserving(phi) && verify_map_spec(psi, D) && verify_map_spec(phi, D);
  if (kind == SequenceKind::gpark) {
    psi = quotient_source(psi, s.merged_var);
    ok = ok && verify_map_spec(psi, D);
  }
  rep.maps_well_defined = ok;

  rep.rows.resize(static_cast<std::size_t>(D + 1));
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t <= D; ++t)
      rep.rows[static_cast<std::size_t>(t)] = check_degree(kind, psi, phi, psi.source, raw_left, s.merged_var, t);
  } else {
    for (int t = 0; t <= D; ++t)
      rep.rows[static_cast<std::size_t>(t)] = check_degree(kind, psi, phi, psi.source, raw_left, s.merged_var, t);
  }
  rep.verdict = rep.maps_well_defined;
  for (const auto& r : rep.rows) rep.verdict = rep.verdict && r.flags.all();
  return rep;
}

}  // namespace tutteseq
