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

#include "tutteseq/report.hpp"

namespace tutteseq {

using nlohmann::json;

json to_json(const IntPoly& p) { return json(p.coefficients()); }

json to_json(const BiPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back({k.first, k.second, c.str()});
  return out;
}

json to_json(const BettiTable& t) {
  json out = json::array();
  for (const auto& [ik, b] : t.entries) out.push_back({ik.first, ik.second, b});
  return out;
}

json to_json(const HilbertData& h) { return {{"h", h.h}, {"k_polynomial", to_json(h.k_polynomial)}}; }

json to_json(const Divisor& d) { return json(d.coefficients()); }

json to_json(const Orientation& a) { return json(a.serialize()); }

json to_json(const ExactnessReport& r) {
  json rows = json::array();
  for (const auto& d : r.rows) {
    rows.push_back({{"t", d.t},
                    {"dimL", d.dimL},
                    {"dimM", d.dimM},
                    {"dimR", d.dimR},
                    {"dim_im_psi", d.dim_im_psi},
                    {"dim_im_phi", d.dim_im_phi},
                    {"dim_ker_phi", d.dim_ker_phi},
                    {"dim_ker_psi", d.dim_ker_psi},
                    {"dim_x12_left", d.dim_x12_left},
                    {"kernel_strictly_larger", d.kernel_strictly_larger},
                    {"flags",
                     {{"complex", d.flags.complex},
                      {"exact_middle", d.flags.exact_middle},
                      {"right_surjective", d.flags.right_surjective},
                      {"left_kernel_as_claimed", d.flags.left_kernel_as_claimed}}}});
  }
  return {{"schema", kSchemaVersion},
          {"kind", to_string(r.kind)},
          {"edge", {r.u, r.v}},
          {"sink", r.sink},
          {"max_degree", r.max_degree},
          {"maps_well_defined", r.maps_well_defined},
          {"per_degree", rows},
          {"verdict", r.verdict}};
}

json to_json(const AltDcReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"A_G", row.a_g},
                    {"A_contracted", row.a_contracted},
                    {"A_contracted_prev", row.a_contracted_prev},
                    {"A_deleted", row.a_deleted},
                    {"holds", row.holds}});
  return {{"rows", rows}, {"zeroth_sum", r.zeroth_sum}, {"ok", r.ok}};
}

json to_json(const VanishingReport& r) {
  auto list = [](const std::vector<VanishingInstance>& v) {
    json out = json::array();
    for (const auto& in : v) out.push_back({in.i, in.j, in.beta_g, in.beta_deleted});
    return out;
  };
  return {{"instances", list(r.instances)}, {"counterexamples", list(r.counterexamples)}, {"ok", r.ok}};
}

}  // namespace tutteseq
