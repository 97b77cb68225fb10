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
#include <vector>

#include "tutteseq/multigraph.hpp"

namespace tutteseq {

/// Integer vector indexed by vertices.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {}
  static Divisor zero(int n) { return Divisor(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }
  static Divisor point(int n, Vertex v, std::int64_t k = 1);

  int size() const { return static_cast<int>(c_.size()); }
  std::int64_t degree() const;
  std::int64_t operator[](Vertex v) const { return c_[static_cast<std::size_t>(v)]; }
  std::int64_t& operator[](Vertex v) { return c_[static_cast<std::size_t>(v)]; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  bool is_effective() const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend auto operator<=>(const Divisor&, const Divisor&) = default;

 private:
  std::vector<std::int64_t> c_;
};

/// A linear equivalence class, held by its q-reduced representative.
struct DivisorClass {
  Divisor reduced;
  Vertex q = 0;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Chip-firing toolkit on the loopless part of a graph with base vertex q.
/// Immutable after construction; safe to share between threads.
class ChipFiring {
 public:
  ChipFiring(const Multigraph& g, Vertex q);

  int vertex_count() const { return n_; }
  Vertex base() const { return q_; }
  int genus() const { return genus_; }
  const std::vector<std::vector<std::int64_t>>& laplacian() const { return lap_; }

  /// The q-reduced divisor linearly equivalent to d.
  Divisor reduce(const Divisor& d) const;
  /// Nonnegative off q and every nonempty S in V\{q} has a vertex holding
  /// fewer chips than its edges leaving S.
  bool is_reduced(const Divisor& d) const;
  bool effective_equivalent(const Divisor& d) const { return reduce(d)[q_] >= 0; }
  /// Baker-Norine rank by exhaustive search over effective E.
  int rank(const Divisor& d) const;

  /// Superstable configurations (q-coordinate 0), via Dhar's burning test.
  std::vector<Divisor> superstables() const;

 private:
  // Vertices of V\{q} that do not burn when fire spreads from q.
  std::vector<char> unburnt(const Divisor& d) const;

  int n_ = 0;
  Vertex q_ = 0;
  int genus_ = 0;
  std::vector<std::vector<std::int64_t>> lap_;
  // Firing -lend_ on V\{q} adds lend_scale_ chips to every vertex off q.
  std::vector<std::int64_t> lend_;
  std::int64_t lend_scale_ = 1;
};

Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q);
bool linearly_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b, Vertex q = 0);
int divisor_rank(const Multigraph& g, const Divisor& d, Vertex q = 0);

/// K(v) = val(v) - 2 on the loopless part.
Divisor canonical_divisor(const Multigraph& g);

/// r(D) - r(K - D) == deg(D) - g + 1.
bool riemann_roch_check(const Multigraph& g, const Divisor& d, Vertex q = 0);

/// Every class of the given degree, one q-reduced representative each.
std::vector<DivisorClass> picard_classes(const Multigraph& g, std::int64_t degree, Vertex q = 0);

/// Classes of degree g - 1 and rank -1.
std::vector<DivisorClass> nonspecial_classes(const Multigraph& g, Vertex q = 0);

}  // namespace tutteseq
