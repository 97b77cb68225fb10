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

#include "tutteseq/divisor.hpp"

#include <algorithm>
#include <numeric>

#include "tutteseq/errors.hpp"

namespace tutteseq {

using boost::multiprecision::cpp_rational;

Divisor Divisor::point(int n, Vertex v, std::int64_t k) {
  Divisor d = zero(n);
  d[v] = k;
  return d;
}

std::int64_t Divisor::degree() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

bool Divisor::is_effective() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x >= 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
  if (o.c_.size() != c_.size()) throw ShapeMismatch("divisor lengths differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  if (o.c_.size() != c_.size()) throw ShapeMismatch("divisor lengths differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ChipFiring::ChipFiring(const Multigraph& g, Vertex q)
    : n_(g.vertex_count()), q_(q), genus_(g.genus()), lap_(tutteseq::laplacian(g)) {
  if (q < 0 || q >= n_) throw InvalidGraph("base vertex out of range");
  lend_.assign(static_cast<std::size_t>(n_), 0);
  if (n_ == 1) return;

  // Solve the reduced Laplacian system Q~ y = 1 over the rationals, then clear
  // denominators: Q~ w = c * 1 with w > 0.
  std::vector<Vertex> idx;
  for (Vertex v = 0; v < n_; ++v)
    if (v != q_) idx.push_back(v);
  const std::size_t k = idx.size();
  std::vector<std::vector<cpp_rational>> a(k, std::vector<cpp_rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = lap_[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(idx[j])];
    a[i][k] = 1;
  }
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t r = p;
    while (a[r][p] == 0) ++r;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == p || a[i][p] == 0) continue;
      cpp_rational f = a[i][p] / a[p][p];
      for (std::size_t j = p; j <= k; ++j) a[i][j] -= f * a[p][j];
    }
  }
  BigInt den = 1;
  std::vector<cpp_rational> y(k);
  for (std::size_t i = 0; i < k; ++i) {
    y[i] = a[i][k] / a[i][i];
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(y[i]));
  }
  lend_scale_ = static_cast<std::int64_t>(den);
  for (std::size_t i = 0; i < k; ++i)
    lend_[static_cast<std::size_t>(idx[i])] =
        static_cast<std::int64_t>(boost::multiprecision::numerator(cpp_rational(y[i] * den)));
}

std::vector<char> ChipFiring::unburnt(const Divisor& d) const {
  std::vector<char> burnt(static_cast<std::size_t>(n_), 0);
  burnt[static_cast<std::size_t>(q_)] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n_; ++v) {
      auto sv = static_cast<std::size_t>(v);
      if (burnt[sv]) continue;
      std::int64_t fire = 0;
      for (Vertex u = 0; u < n_; ++u)
        if (u != v && burnt[static_cast<std::size_t>(u)]) fire -= lap_[sv][static_cast<std::size_t>(u)];
      if (fire > d[v]) {
        burnt[sv] = 1;
        changed = true;
      }
    }
  }
  for (auto& b : burnt) b = !b;
  return burnt;
}

Divisor ChipFiring::reduce(const Divisor& in) const {
  if (in.size() != n_) throw ShapeMismatch("divisor length does not match the graph");
  Divisor d = in;
  if (n_ == 1) return d;

  std::int64_t low = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (v != q_) low = std::min(low, d[v]);
  if (low < 0) {
    const std::int64_t k = (-low + lend_scale_ - 1) / lend_scale_;
    for (Vertex v = 0; v < n_; ++v) {
      std::int64_t qw = 0;
      for (Vertex u = 0; u < n_; ++u)
        qw += lap_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] * lend_[static_cast<std::size_t>(u)];
      d[v] += k * qw;
    }
  }

  for (;;) {
    auto s = unburnt(d);
    if (std::none_of(s.begin(), s.end(), [](char c) { return c != 0; })) break;
    std::vector<std::int64_t> out(static_cast<std::size_t>(n_), 0);
    std::int64_t times = -1;
    for (Vertex v = 0; v < n_; ++v) {
      auto sv = static_cast<std::size_t>(v);
      if (!s[sv]) continue;
      for (Vertex u = 0; u < n_; ++u)
        if (!s[static_cast<std::size_t>(u)]) out[sv] -= lap_[sv][static_cast<std::size_t>(u)];
      if (out[sv] > 0) {
        std::int64_t t = d[v] / out[sv];
        times = times < 0 ? t : std::min(times, t);
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      auto sv = static_cast<std::size_t>(v);
      if (s[sv]) {
        d[v] -= times * out[sv];
      } else {
        std::int64_t in_edges = 0;
        for (Vertex u = 0; u < n_; ++u)
          if (s[static_cast<std::size_t>(u)]) in_edges -= lap_[sv][static_cast<std::size_t>(u)];
        d[v] += times * in_edges;
      }
    }
  }
  return d;
}

bool ChipFiring::is_reduced(const Divisor& d) const {
  for (Vertex v = 0; v < n_; ++v)
    if (v != q_ && d[v] < 0) return false;
  auto s = unburnt(d);
  return std::none_of(s.begin(), s.end(), [](char c) { return c != 0; });
}

int ChipFiring::rank(const Divisor& d) const {
  if (!effective_equivalent(d)) return -1;
  Divisor e = Divisor::zero(n_);
  // Does some effective E of degree k leave d - E without an effective equivalent?
  auto bad = [&](auto&& self, Vertex v, std::int64_t left) -> bool {
    if (v == n_ - 1) {
      e[v] = left;
      bool r = !effective_equivalent(d - e);
      e[v] = 0;
      return r;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      e[v] = c;
      if (self(self, v + 1, left - c)) {
        e[v] = 0;
        return true;
      }
    }
    e[v] = 0;
    return false;
  };
  for (int k = 1;; ++k)
    if (bad(bad, 0, k)) return k - 1;
}

std::vector<Divisor> ChipFiring::superstables() const {
  std::vector<Divisor> out;
  std::vector<std::int64_t> cap(static_cast<std::size_t>(n_), 0);
  for (Vertex v = 0; v < n_; ++v)
    if (v != q_) cap[static_cast<std::size_t>(v)] = lap_[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)];
  Divisor b = Divisor::zero(n_);
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == n_) {
      auto s = unburnt(b);
      if (std::none_of(s.begin(), s.end(), [](char c) { return c != 0; })) out.push_back(b);
      return;
    }
    if (v == q_) {
      self(self, v + 1);
      return;
    }
    for (std::int64_t c = 0; c < cap[static_cast<std::size_t>(v)]; ++c) {
      b[v] = c;
      self(self, v + 1);
    }
    b[v] = 0;
  };
  rec(rec, 0);
  return out;
}

Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q) { return ChipFiring(g, q).reduce(d); }

bool linearly_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b, Vertex q) {
  if (a.size() != b.size()) throw ShapeMismatch("divisor lengths differ");
  if (a.degree() != b.degree()) return false;
  ChipFiring cf(g, q);
  return cf.reduce(a) == cf.reduce(b);
}

int divisor_rank(const Multigraph& g, const Divisor& d, Vertex q) { return ChipFiring(g, q).rank(d); }

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k = Divisor::zero(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) k[v] = g.valence(v) - 2;
  return k;
}

bool riemann_roch_check(const Multigraph& g, const Divisor& d, Vertex q) {
  ChipFiring cf(g, q);
  const Divisor k = canonical_divisor(g);
  return cf.rank(d) - cf.rank(k - d) == d.degree() - g.genus() + 1;
}

std::vector<DivisorClass> picard_classes(const Multigraph& g, std::int64_t degree, Vertex q) {
  std::vector<DivisorClass> out;
  for (Divisor b : ChipFiring(g, q).superstables()) {
    b[q] = degree - b.degree();
    out.push_back({std::move(b), q});
  }
  return out;
}

std::vector<DivisorClass> nonspecial_classes(const Multigraph& g, Vertex q) {
  std::vector<DivisorClass> out;
  for (auto& c : picard_classes(g, g.genus() - 1, q))
    if (c.reduced[q] < 0) out.push_back(std::move(c));
  return out;
}

}  // namespace tutteseq
