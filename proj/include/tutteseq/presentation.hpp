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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tutteseq/gf2.hpp"
#include "tutteseq/multigraph.hpp"
#include "tutteseq/parallel.hpp"
#include "tutteseq/series.hpp"

namespace tutteseq {

inline constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  static Monomial variable(int i, int power = 1);
  int degree() const;
  Monomial operator*(const Monomial& o) const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// monomial * generator, coefficient 1 over GF(2).
struct Term {
  Monomial mono;
  std::uint32_t gen = 0;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Sort and cancel equal terms in pairs.
void normalize(std::vector<Term>& terms);

struct Generator {
  std::string label;
  int degree = 0;
};

struct Relation {
  std::vector<Term> terms;
  int degree = 0;
};

/// Graded module over GF(2)[x_0..x_{var_count-1}] given by generators and
/// homogeneous relations.
struct ModulePresentation {
  int var_count = 0;
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  /// Appends a relation after normalizing; empty relations are dropped.
  /// Throws ShapeMismatch if the terms are not homogeneous.
  void add_relation(std::vector<Term> terms);
  int term_degree(const Term& t) const { return t.mono.degree() + generators.at(t.gen).degree; }
};

/// Standard presentation of the parking critical module: generators are the
/// unique-sink orientations, relations come in the three pair types.
ModulePresentation gpark_presentation(const Multigraph& g, Vertex sink);

/// Standard presentation of the toppling critical module: generators are
/// orientation classes, one relation per pair and class on the pair's
/// contraction.
ModulePresentation toppling_presentation(const Multigraph& g, Vertex sink);

/// Substitute x_i1, x_i2 -> one variable, indexed as in merge_relabel.
ModulePresentation specialize_to_Re(const ModulePresentation& p, int i1, int i2);

/// M / x_var M.
ModulePresentation quotient_by_generator_multiples(const ModulePresentation& p, int var);

/// All monomials of a degree in k variables, in column order.
const std::vector<Monomial>& monomials_of_degree(int k, int degree);

/// Degree-t slice: ambient (monomial, generator) columns and the span of
/// the relation multiples landing there.
class GradedPiece {
 public:
  GradedPiece(const ModulePresentation& p, int t);

  int degree() const { return t_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return ambient_ - rel_.rank(); }
  const SparseEchelon& relations() const { return rel_; }

  /// Column of mono * generator gen; its degree must be t.
  std::uint32_t column(const Monomial& mono, std::uint32_t gen) const;
  /// Terms of degree t as a GF(2) row.
  SparseRow row(const std::vector<Term>& terms) const;
  /// Every ambient basis term, in column order.
  std::vector<Term> basis() const;

 private:
  const ModulePresentation* p_;
  int t_;
  std::vector<std::size_t> offset_;
  std::vector<const std::vector<Monomial>*> monos_;
  std::size_t ambient_ = 0;
  SparseEchelon rel_;
};

std::size_t graded_dim(const ModulePresentation& p, int t);
HilbertData hilbert_function(const ModulePresentation& p, int max_degree, Execution exec = Execution::serial);

/// Multiplication by the sum of the listed variables.
struct LinearForm {
  std::vector<int> vars;
};

/// Multiplication M_t -> M_{t+1} is injective for every t <= max_degree.
bool nzd_check(const ModulePresentation& p, const LinearForm& form, int max_degree);
bool nzd_at(const ModulePresentation& p, const LinearForm& form, int t);

/// Relations grouped by degree.
std::vector<std::int64_t> relation_degree_census(const ModulePresentation& p);

}  // namespace tutteseq
