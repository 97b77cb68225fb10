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

#include "tutteseq/series.hpp"

#include <algorithm>

#include "tutteseq/divisor.hpp"
#include "tutteseq/errors.hpp"

namespace tutteseq {

HilbertData::HilbertData(std::vector<std::int64_t> coeffs) : h(std::move(coeffs)) {
  std::vector<std::int64_t> k(h.size());
  for (std::size_t t = 0; t < h.size(); ++t) k[t] = h[t] - (t ? h[t - 1] : 0);
  k_polynomial = IntPoly(std::move(k));
}

IntPoly k_polynomial_from(const std::vector<std::int64_t>& h) {
  HilbertData data(h);
  if (!data.stabilized()) throw NotStabilized("Hilbert coefficients have not stabilized by the truncation degree");
  return data.k_polynomial;
}

std::vector<Exponents> parking_monomial_generators(const Multigraph& g, Vertex q) {
  const int n = g.vertex_count();
  if (q < 0 || q >= n) throw InvalidGraph("sink out of range");
  if (n > 30) throw InvalidGraph("too many vertices for subset enumeration");
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != q) others.push_back(v);
  std::vector<Exponents> out;
  for (std::uint32_t mask = 1; mask < (1U << others.size()); ++mask) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask >> i & 1U) in[static_cast<std::size_t>(others[i])] = 1;
    Exponents e(static_cast<std::size_t>(n), 0);
    for (const Edge& ed : g.edges()) {
      if (ed.is_loop()) continue;
      bool a = in[static_cast<std::size_t>(ed.u)], b = in[static_cast<std::size_t>(ed.v)];
      if (a && !b) ++e[static_cast<std::size_t>(ed.u)];
      if (b && !a) ++e[static_cast<std::size_t>(ed.v)];
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Exponents> superstables(const Multigraph& g, Vertex q, Execution exec) {
  const int n = g.vertex_count();
  const auto gens = parking_monomial_generators(g, q);
  // Any superstable has b(v) < val(v), from S = {v}.
  std::vector<Exponents> candidates;
  Exponents b(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      candidates.push_back(b);
      return;
    }
    const int cap = v == q ? 1 : g.valence(v);
    for (int c = 0; c < cap; ++c) {
      b[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
    b[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0);

  auto escapes = [&](const Exponents& x) {
    for (const auto& m : gens) {
      bool divisible = true;
      for (std::size_t i = 0; i < m.size() && divisible; ++i) divisible = x[i] >= m[i];
      if (divisible) return false;
    }
    return true;
  };
  std::vector<char> keep(candidates.size(), 0);
  const auto count = static_cast<std::int64_t>(candidates.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i)
      keep[static_cast<std::size_t>(i)] = escapes(candidates[static_cast<std::size_t>(i)]);
  } else {
    for (std::int64_t i = 0; i < count; ++i)
      keep[static_cast<std::size_t>(i)] = escapes(candidates[static_cast<std::size_t>(i)]);
  }
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(std::move(candidates[i]));
  return out;
}

namespace {

int total(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

}  // namespace

HilbertData hilb_parking(const Multigraph& g, Vertex q, int max_degree, Execution exec) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
  for (const auto& b : superstables(g, q, exec))
    for (int d = total(b); d <= max_degree; ++d) ++h[static_cast<std::size_t>(d)];
  return HilbertData(std::move(h));
}

std::int64_t hilb_toppling(const Multigraph& g, std::int64_t d, Vertex q) {
  ChipFiring cf(g, q);
  std::int64_t count = 0;
  for (const auto& c : picard_classes(g, d, q))
    if (cf.rank(c.reduced) >= 0) ++count;
  return count;
}

std::int64_t bsc_coefficient(const Multigraph& g, std::int64_t k, Vertex q) {
  ChipFiring cf(g, q);
  std::int64_t count = 0;
  for (const auto& c : picard_classes(g, g.genus() - 1 + k, q))
    if (cf.rank(c.reduced) == k - 1) ++count;
  return count;
}

HilbertData bsc_coefficients(const Multigraph& g, Vertex q, int max_degree, Execution exec) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k <= max_degree; ++k) h[static_cast<std::size_t>(k)] = bsc_coefficient(g, k, q);
  } else {
    for (int k = 0; k <= max_degree; ++k) h[static_cast<std::size_t>(k)] = bsc_coefficient(g, k, q);
  }
  return HilbertData(std::move(h));
}

IntPoly superstable_reciprocity(const Multigraph& g, Vertex q) {
  IntPoly p;
  for (const auto& b : superstables(g, q)) p += IntPoly::monomial(g.genus() - total(b) + g.loop_count());
  return p;
}

}  // namespace tutteseq
