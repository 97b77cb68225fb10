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

#include "tutteseq/module_map.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "tutteseq/errors.hpp"
#include "tutteseq/orientation.hpp"

namespace tutteseq {

EdgeSetup edge_setup(const Multigraph& g, Vertex u, Vertex v, Vertex sink) {
  if (sink != u && sink != v)
    throw SinkMismatch("sink " + std::to_string(sink) + " is not an endpoint of the edge");
  if (is_bridge(g, u, v)) throw BridgeEdge("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a bridge");
  const Vertex other = sink == u ? v : u;
  auto c = contract_edge(g, other, sink);
  const Vertex cs = c.relabel[static_cast<std::size_t>(sink)];
  return {g, std::move(c.graph), delete_edge(g, other, sink), other, sink, cs, cs, g.multiplicity(u, v)};
}

std::vector<Term> apply_map(const MapSpec& ms, const std::vector<Term>& element) {
  std::vector<Term> out;
  for (const Term& t : element)
    for (const Term& img : ms.images.at(t.gen)) out.push_back({t.mono * img.mono, img.gen});
  normalize(out);
  return out;
}

bool degree_preserving(const MapSpec& ms) {
  for (std::size_t g = 0; g < ms.images.size(); ++g)
    for (const Term& t : ms.images[g])
      if (ms.target.term_degree(t) != ms.source.generators[g].degree) return false;
  return true;
}

bool verify_map_spec(const MapSpec& ms, int max_degree) {
  if (!degree_preserving(ms)) return false;
  std::map<int, std::unique_ptr<GradedPiece>> pieces;
  for (const Relation& r : ms.source.relations) {
    if (r.degree > max_degree) continue;
    std::map<int, std::vector<Term>> by_degree;
    for (const Term& t : apply_map(ms, r.terms)) by_degree[ms.target.term_degree(t)].push_back(t);
    for (const auto& [d, terms] : by_degree) {
      auto& piece = pieces[d];
      if (!piece) piece = std::make_unique<GradedPiece>(ms.target, d);
      if (!piece->relations().contains(piece->row(terms))) return false;
    }
  }
  return true;
}

MapSpec quotient_source(const MapSpec& ms, int var) {
  MapSpec out = ms;
  out.source = quotient_by_generator_multiples(ms.source, var);
  return out;
}

namespace {

std::uint32_t by_label(const ModulePresentation& p, const std::string& label) {
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i].label == label) return static_cast<std::uint32_t>(i);
  throw ShapeMismatch("no generator labeled " + label);
}

std::vector<Orientation> sorted_unique_sink(const Multigraph& g, Vertex q) {
  auto out = enumerate_unique_sink(g, q);
  std::sort(out.begin(), out.end(), serialization_less);
  return out;
}

std::string class_label(const Orientation& rep) { return "[" + rep.to_string() + "]"; }

}  // namespace

MapSpec build_psi0(const EdgeSetup& s) {
  MapSpec ms{"psi0", gpark_presentation(s.contracted, s.contracted_sink),
             specialize_to_Re(gpark_presentation(s.g, s.sink), s.other, s.sink), {}};
  const Monomial lift_power = Monomial::variable(s.merged_var, s.multiplicity - 1);
  for (const auto& a : sorted_unique_sink(s.contracted, s.contracted_sink))
    ms.images.push_back({{lift_power, by_label(ms.target, lift_plus(a, s.g, s.other, s.sink).to_string())}});
  return ms;
}

MapSpec build_phi0(const EdgeSetup& s) {
  MapSpec ms{"phi0", specialize_to_Re(gpark_presentation(s.g, s.sink), s.other, s.sink),
             specialize_to_Re(gpark_presentation(s.deleted, s.sink), s.other, s.sink), {}};
  for (const auto& a : sorted_unique_sink(s.g, s.sink)) {
    if (s.multiplicity == 1 && restrict_contract(a, s.other, s.sink)) {
      ms.images.emplace_back();
      continue;
    }
    ms.images.push_back({{Monomial{}, by_label(ms.target, restrict_delete(a, s.other, s.sink).to_string())}});
  }
  return ms;
}

MapSpec build_psi1(const EdgeSetup& s) {
  MapSpec ms{"psi1", toppling_presentation(s.contracted, s.contracted_sink),
             specialize_to_Re(toppling_presentation(s.g, s.sink), s.other, s.sink), {}};
  OrientationClassifier target_cls(s.g, s.sink);
  const Monomial lift_power = Monomial::variable(s.merged_var, s.multiplicity - 1);
  const OrientationClassifier source_cls(s.contracted, s.contracted_sink);
  for (const auto& a : source_cls.representatives()) {
    std::vector<Term> img{
        {lift_power, by_label(ms.target, class_label(target_cls.classify(lift_plus(a, s.g, s.other, s.sink)).canonical))},
        {lift_power, by_label(ms.target, class_label(target_cls.classify(lift_minus(a, s.g, s.other, s.sink)).canonical))}};
    normalize(img);
    ms.images.push_back(std::move(img));
  }
  return ms;
}

MapSpec build_phi1(const EdgeSetup& s) {
  MapSpec ms{"phi1", specialize_to_Re(toppling_presentation(s.g, s.sink), s.other, s.sink),
             specialize_to_Re(toppling_presentation(s.deleted, s.sink), s.other, s.sink), {}};
  OrientationClassifier target_cls(s.deleted, s.sink);
  const OrientationClassifier source_cls(s.g, s.sink);
  for (const auto& a : source_cls.representatives())
    ms.images.push_back(
        {{Monomial{}, by_label(ms.target, class_label(target_cls.classify(restrict_delete(a, s.other, s.sink)).canonical))}});
  return ms;
}

}  // namespace tutteseq
