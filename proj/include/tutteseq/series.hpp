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
#include "tutteseq/parallel.hpp"
#include "tutteseq/poly.hpp"

namespace tutteseq {

/// Hilbert coefficients h_0..h_D and the differences (1 - t) * Hil(t)
/// truncated at D. The differences are the K-polynomial once stabilized().
struct HilbertData {
  std::vector<std::int64_t> h;
  IntPoly k_polynomial;

  HilbertData() = default;
  explicit HilbertData(std::vector<std::int64_t> coeffs);
  int truncation() const { return static_cast<int>(h.size()) - 1; }
  bool stabilized() const { return h.size() >= 2 && h[h.size() - 1] == h[h.size() - 2]; }
  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// K(t) with K(t)/(1 - t) matching h; throws NotStabilized unless the last
/// two coefficients agree.
IntPoly k_polynomial_from(const std::vector<std::int64_t>& h);

using Exponents = std::vector<int>;

/// One exponent vector per nonempty S in V\{q}: coordinate v in S counts the
/// non-loop edges from v to V\S.
std::vector<Exponents> parking_monomial_generators(const Multigraph& g, Vertex q);

/// Exponent vectors (q-coordinate 0) divisible by no parking generator.
std::vector<Exponents> superstables(const Multigraph& g, Vertex q, Execution exec = Execution::serial);

/// h_d = number of monomials of degree d outside the parking ideal.
HilbertData hilb_parking(const Multigraph& g, Vertex q, int max_degree, Execution exec = Execution::serial);

/// Number of divisor classes of degree d and nonnegative rank.
std::int64_t hilb_toppling(const Multigraph& g, std::int64_t d, Vertex q = 0);

/// Number of classes of degree g - 1 + k and rank k - 1.
std::int64_t bsc_coefficient(const Multigraph& g, std::int64_t k, Vertex q = 0);
HilbertData bsc_coefficients(const Multigraph& g, Vertex q, int max_degree, Execution exec = Execution::serial);

/// t^l * sum over superstables b of t^(g - deg b).
IntPoly superstable_reciprocity(const Multigraph& g, Vertex q);

}  // namespace tutteseq
