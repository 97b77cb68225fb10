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

#include "tutteseq/presentation.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "tutteseq/errors.hpp"
#include "tutteseq/orientation.hpp"

namespace tutteseq {

Monomial Monomial::variable(int i, int power) {
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
  return m;
}

void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2) out.push_back(terms[i]);
    i = j;
  }
  terms.swap(out);
}

void ModulePresentation::add_relation(std::vector<Term> terms) {
  normalize(terms);
  if (terms.empty()) return;
  const int d = term_degree(terms.front());
  for (const Term& t : terms) {
    if (term_degree(t) != d) throw ShapeMismatch("relation is not homogeneous");
    for (int v = var_count; v < kMaxVars; ++v)
      if (t.mono.e[static_cast<std::size_t>(v)]) throw ShapeMismatch("relation uses a variable out of range");
  }
  relations.push_back({std::move(terms), d});
}

namespace {

struct LabeledGenerators {
  std::vector<Orientation> orientations;
  std::map<Orientation, std::uint32_t> index;
};

LabeledGenerators sorted_generators(std::vector<Orientation> gens) {
  std::sort(gens.begin(), gens.end(), serialization_less);
  LabeledGenerators out;
  for (std::size_t i = 0; i < gens.size(); ++i) out.index.emplace(gens[i], static_cast<std::uint32_t>(i));
  out.orientations = std::move(gens);
  return out;
}

void check_presentable(const Multigraph& g, Vertex sink) {
  if (g.vertex_count() > kMaxVars) throw InvalidGraph("at most 16 vertices are supported");
  if (sink < 0 || sink >= g.vertex_count()) throw InvalidGraph("sink out of range");
}

}  // namespace

ModulePresentation gpark_presentation(const Multigraph& g, Vertex sink) {
  check_presentable(g, sink);
  auto gens = sorted_generators(enumerate_unique_sink(g, sink));
  ModulePresentation p;
  p.var_count = g.vertex_count();
  for (const auto& a : gens.orientations) p.generators.push_back({a.to_string(), g.loop_count()});

  auto lookup = [&](const Orientation& a) {
    auto it = gens.index.find(a);
    if (it == gens.index.end()) throw ShapeMismatch("lifted orientation is not a generator");
    return it->second;
  };
  for (auto [vi, vj] : g.adjacent_pairs()) {
    const int m = g.multiplicity(vi, vj);
    auto pc = contract_pair(g, vi, vj);
    for (const auto& a : enumerate_unique_sink(pc.graph, pc.relabel[static_cast<std::size_t>(sink)])) {
      Orientation plus = lift_plus(a, g, vi, vj), minus = lift_minus(a, g, vi, vj);
      const bool plus_ok = plus.has_unique_sink_at(sink), minus_ok = minus.has_unique_sink_at(sink);
      std::vector<Term> terms;
      if (vj == sink || !minus_ok) {
        terms.push_back({Monomial::variable(vi, m), lookup(plus)});
      } else if (vi == sink || !plus_ok) {
        terms.push_back({Monomial::variable(vj, m), lookup(minus)});
      } else {
        terms.push_back({Monomial::variable(vi, m), lookup(plus)});
        terms.push_back({Monomial::variable(vj, m), lookup(minus)});
      }
      p.add_relation(std::move(terms));
    }
  }
  return p;
}

ModulePresentation toppling_presentation(const Multigraph& g, Vertex sink) {
  check_presentable(g, sink);
  OrientationClassifier cls(g, sink);
  ModulePresentation p;
  p.var_count = g.vertex_count();
  for (const auto& a : cls.representatives()) p.generators.push_back({"[" + a.to_string() + "]", g.loop_count()});
  for (auto [vi, vj] : g.adjacent_pairs()) {
    const int m = g.multiplicity(vi, vj);
    auto pc = contract_pair(g, vi, vj);
    for (const auto& a : enumerate_unique_sink(pc.graph, pc.relabel[static_cast<std::size_t>(sink)])) {
      auto plus = static_cast<std::uint32_t>(cls.index_of(lift_plus(a, g, vi, vj)));
      auto minus = static_cast<std::uint32_t>(cls.index_of(lift_minus(a, g, vi, vj)));
      p.add_relation({{Monomial::variable(vi, m), plus}, {Monomial::variable(vj, m), minus}});
    }
  }
  return p;
}

ModulePresentation specialize_to_Re(const ModulePresentation& p, int i1, int i2) {
  if (i1 == i2 || i1 < 0 || i2 < 0 || i1 >= p.var_count || i2 >= p.var_count)
    throw ShapeMismatch("specialization needs two distinct variables");
  auto relabel = merge_relabel(p.var_count, i1, i2);
  ModulePresentation out;
  out.var_count = p.var_count - 1;
  out.generators = p.generators;
  for (const Relation& r : p.relations) {
    std::vector<Term> terms;
    for (const Term& t : r.terms) {
      Monomial m;
      for (int w = 0; w < p.var_count; ++w)
        m.e[static_cast<std::size_t>(relabel[static_cast<std::size_t>(w)])] += t.mono.e[static_cast<std::size_t>(w)];
      terms.push_back({m, t.gen});
    }
    out.add_relation(std::move(terms));
  }
  return out;
}

ModulePresentation quotient_by_generator_multiples(const ModulePresentation& p, int var) {
  if (var < 0 || var >= p.var_count) throw ShapeMismatch("variable out of range");
  ModulePresentation out = p;
  for (std::uint32_t g = 0; g < p.generators.size(); ++g) out.add_relation({{Monomial::variable(var), g}});
  return out;
}

const std::vector<Monomial>& monomials_of_degree(int k, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Monomial>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, degree}];
  if (!slot) {
    slot = std::make_unique<std::vector<Monomial>>();
    if (degree >= 0 && k >= 1) {
      Monomial m;
      auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == k - 1) {
          m.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(left);
          slot->push_back(m);
          m.e[static_cast<std::size_t>(v)] = 0;
          return;
        }
        for (int c = 0; c <= left; ++c) {
          m.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(c);
          self(self, v + 1, left - c);
        }
        m.e[static_cast<std::size_t>(v)] = 0;
      };
      rec(rec, 0, degree);
    } else if (degree == 0) {
      slot->push_back(Monomial{});
    }
  }
  return *slot;
}

GradedPiece::GradedPiece(const ModulePresentation& p, int t) : p_(&p), t_(t) {
  offset_.assign(p.generators.size(), 0);
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    offset_[g] = ambient_;
    monos_.push_back(&monomials_of_degree(p.var_count, t - p.generators[g].degree));
    ambient_ += monos_.back()->size();
  }
  rel_ = SparseEchelon(ambient_);
  for (const Relation& r : p.relations) {
    if (r.degree > t) continue;
    for (const Monomial& mu : monomials_of_degree(p.var_count, t - r.degree)) {
      std::vector<Term> terms;
      terms.reserve(r.terms.size());
      for (const Term& term : r.terms) terms.push_back({mu * term.mono, term.gen});
      rel_.insert(row(terms));
    }
  }
}

std::uint32_t GradedPiece::column(const Monomial& mono, std::uint32_t gen) const {
  const auto& monos = *monos_.at(gen);
  auto it = std::lower_bound(monos.begin(), monos.end(), mono);
  if (it == monos.end() || *it != mono) throw ShapeMismatch("term does not have the piece's degree");
  return static_cast<std::uint32_t>(offset_[gen] + static_cast<std::size_t>(it - monos.begin()));
}

SparseRow GradedPiece::row(const std::vector<Term>& terms) const {
  SparseRow r;
  r.reserve(terms.size());
  for (const Term& t : terms) r.push_back(column(t.mono, t.gen));
  normalize(r);
  return r;
}

std::vector<Term> GradedPiece::basis() const {
  std::vector<Term> out;
  out.reserve(ambient_);
  for (std::uint32_t g = 0; g < p_->generators.size(); ++g)
    for (const Monomial& m : *monos_[g]) out.push_back({m, g});
  return out;
}

std::size_t graded_dim(const ModulePresentation& p, int t) { return GradedPiece(p, t).dim(); }

HilbertData hilbert_function(const ModulePresentation& p, int max_degree, Execution exec) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t <= max_degree; ++t) h[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(graded_dim(p, t));
  } else {
    for (int t = 0; t <= max_degree; ++t) h[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(graded_dim(p, t));
  }
  return HilbertData(std::move(h));
}

bool nzd_at(const ModulePresentation& p, const LinearForm& form, int t) {
  GradedPiece here(p, t), next(p, t + 1);
  SparseEchelon span = next.relations();
  std::size_t gained = 0;
  for (const Term& b : here.basis()) {
    std::vector<Term> image;
    for (int v : form.vars) image.push_back({b.mono * Monomial::variable(v), b.gen});
    normalize(image);
    if (span.insert(next.row(image))) ++gained;
  }
  return gained == here.dim();
}

bool nzd_check(const ModulePresentation& p, const LinearForm& form, int max_degree) {
  for (int t = 0; t <= max_degree; ++t)
    if (!nzd_at(p, form, t)) return false;
  return true;
}

std::vector<std::int64_t> relation_degree_census(const ModulePresentation& p) {
  std::vector<std::int64_t> out;
  for (const Relation& r : p.relations) {
    if (static_cast<std::size_t>(r.degree) >= out.size()) out.resize(static_cast<std::size_t>(r.degree) + 1, 0);
    ++out[static_cast<std::size_t>(r.degree)];
  }
  return out;
}

}  // namespace tutteseq
