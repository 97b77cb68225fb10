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

#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "tutteseq/errors.hpp"

namespace tutteseq::testing {

namespace {

int rank_of(int n, const std::vector<Edge>& edges, std::uint32_t mask) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  int r = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    int a = find(edges[i].u), b = find(edges[i].v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      ++r;
    }
  }
  return r;
}

BiPoly power_minus_one(int a, int b) {
  // (x-1)^a (y-1)^b expanded with binomials.
  BiPoly p;
  BigInt ca = 1;
  for (int i = 0; i <= a; ++i) {
    BigInt cb = 1;
    for (int j = 0; j <= b; ++j) {
      BigInt c = ca * cb;
      if ((a - i + b - j) % 2) c = -c;
      p += BiPoly::monomial(i, j, c);
      cb = cb * (b - j) / (j + 1);
    }
    ca = ca * (a - i) / (i + 1);
  }
  return p;
}

}  // namespace

BiPoly corank_nullity_tutte(const Multigraph& g) {
  const auto& edges = g.edges();
  const int n = g.vertex_count();
  const int full = rank_of(n, edges, (1U << edges.size()) - 1);
  BiPoly t;
  for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
    int r = rank_of(n, edges, mask);
    t += power_minus_one(full - r, __builtin_popcount(mask) - r);
  }
  return t;
}

std::int64_t enumerate_spanning_trees(const Multigraph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!e.is_loop()) edges.push_back(e);
  const int n = g.vertex_count();
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask)
    if (__builtin_popcount(mask) == n - 1 && rank_of(n, edges, mask) == n - 1) ++count;
  return count;
}

std::vector<VertexPartition> brute_connected_partitions(const Multigraph& g, int i) {
  const int n = g.vertex_count();
  std::vector<VertexPartition> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  // All labelings into at most n blocks, keeping canonical (first-occurrence) ones.
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      int blocks = 0;
      for (int v = 0; v < n; ++v) blocks = std::max(blocks, label[static_cast<std::size_t>(v)] + 1);
      std::vector<int> first(static_cast<std::size_t>(blocks), -1);
      for (int v = 0; v < n; ++v)
        if (first[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] < 0) first[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = v;
      for (int b = 1; b < blocks; ++b)
        if (first[static_cast<std::size_t>(b)] < first[static_cast<std::size_t>(b - 1)] || first[static_cast<std::size_t>(b)] < 0) return;
      if (first[0] < 0 || n - blocks != i) return;
      std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(blocks));
      for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
      for (const auto& part : parts) {
        // BFS inside the block.
        std::vector<char> seen(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);
        for (Vertex v : part) in[static_cast<std::size_t>(v)] = 1;
        std::deque<Vertex> q{part.front()};
        seen[static_cast<std::size_t>(part.front())] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
          Vertex x = q.front();
          q.pop_front();
          for (const Edge& e : g.edges()) {
            Vertex y = e.u == x ? e.v : (e.v == x ? e.u : -1);
            if (y < 0 || !in[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            ++reached;
            q.push_back(y);
          }
        }
        if (reached != part.size()) return;
      }
      out.emplace_back(std::move(parts));
      return;
    }
    for (int b = 0; b < n; ++b) {
      label[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

// Solves the reduced Laplacian system over the rationals and checks that
// the firing vector is integral.
bool in_lattice(const Multigraph& g, const Divisor& diff) {
  using boost::multiprecision::cpp_rational;
  const int n = g.vertex_count();
  if (diff.degree() != 0) return false;
  if (n == 1) return true;
  const auto lap = laplacian(g);
  const std::size_t k = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<cpp_rational>> a(k, std::vector<cpp_rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = lap[i + 1][j + 1];
    a[i][k] = diff[static_cast<Vertex>(i + 1)];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[c], a[p]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const cpp_rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[c][j];
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (boost::multiprecision::denominator(cpp_rational(a[i][k] / a[i][i])) != 1) return false;
  return true;
}

bool superstable_by_definition(const Multigraph& g, const Divisor& d, Vertex q) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v)
    if (v != q && d[v] < 0) return false;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (mask >> q & 1U) continue;
    bool legal = true;
    for (Vertex v = 0; v < n && legal; ++v) {
      if (!(mask >> v & 1U)) continue;
      std::int64_t out = 0;
      for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        if (e.u == v && !(mask >> e.v & 1U)) ++out;
        if (e.v == v && !(mask >> e.u & 1U)) ++out;
      }
      legal = d[v] >= out;
    }
    if (legal) return false;
  }
  return true;
}

}  // namespace

bool lattice_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2) {
  Divisor diff = d1;
  diff -= d2;
  return in_lattice(g, diff);
}

Divisor lattice_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
  const int n = g.vertex_count();
  std::vector<Divisor> hits;
  Divisor b = Divisor::zero(n);
  std::function<void(Vertex, std::int64_t)> rec = [&](Vertex v, std::int64_t used) {
    if (v == n) {
      b[q] = d.degree() - used;
      if (superstable_by_definition(g, b, q) && lattice_equivalent(g, d, b)) hits.push_back(b);
      b[q] = 0;
      return;
    }
    if (v == q) {
      rec(v + 1, used);
      return;
    }
    std::int64_t out = 0;
    for (const Edge& e : g.edges())
      if (!e.is_loop() && (e.u == v || e.v == v)) ++out;
    for (std::int64_t c = 0; c < out; ++c) {
      b[v] = c;
      rec(v + 1, used + c);
    }
    b[v] = 0;
  };
  rec(0, 0);
  return hits.size() == 1 ? hits.front() : Divisor();
}

std::vector<std::pair<Orientation, int>> reversal_ball(const Orientation& a) {
  std::map<Orientation, int> dist{{a, 0}};
  std::deque<Orientation> q{a};
  while (!q.empty()) {
    Orientation cur = q.front();
    q.pop_front();
    for (Vertex v = 0; v < cur.vertex_count(); ++v) {
      if (!cur.is_source(v) && !cur.is_sink(v)) continue;
      Orientation nxt = source_sink_reverse(cur, v);
      if (dist.emplace(nxt, dist[cur] + 1).second) q.push_back(nxt);
    }
  }
  return {dist.begin(), dist.end()};
}

std::vector<Orientation> brute_acyclic(const Multigraph& g) {
  const auto pairs = g.adjacent_pairs();
  std::vector<Orientation> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<char> rev(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) rev[i] = static_cast<char>(mask >> i & 1U);
    try {
      out.push_back(Orientation::from_directions(g, rev));
    } catch (const InvalidGraph&) {
    }
  }
  return out;
}

}  // namespace tutteseq::testing
