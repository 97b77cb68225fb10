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

#include "tutteseq/orientation.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

#include "tutteseq/errors.hpp"

namespace tutteseq {

namespace {

bool acyclic(int n, const std::vector<Arc>& arcs) {
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (const Arc& a : arcs) {
    out[static_cast<std::size_t>(a.from)].push_back(a.to);
    ++indeg[static_cast<std::size_t>(a.to)];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : out[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return seen == n;
}

bool arc_pair_less(const Arc& a, const Arc& b) {
  return std::pair{a.lo(), a.hi()} < std::pair{b.lo(), b.hi()};
}

struct PairMult {
  Vertex a, b;
  int m;
};

std::vector<PairMult> pair_multiplicities(const Multigraph& g) {
  std::vector<PairMult> out;
  for (auto [a, b] : g.adjacent_pairs()) out.push_back({a, b, g.multiplicity(a, b)});
  return out;
}

Orientation lift(const Orientation& a, const Multigraph& g, Vertex u, Vertex v, Vertex source) {
  if (u == v) throw SameVertex("edge endpoints coincide");
  if (g.multiplicity(u, v) == 0) throw NoSuchEdge("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  if (a.vertex_count() != g.vertex_count() - 1) throw ShapeMismatch("orientation does not live on the contraction");
  auto relabel = merge_relabel(g.vertex_count(), u, v);
  std::vector<Arc> arcs;
  for (const PairMult& p : pair_multiplicities(g)) {
    if (Edge(p.a, p.b) == Edge(u, v)) {
      arcs.push_back({source, source == u ? v : u, p.m});
      continue;
    }
    Vertex ra = relabel[static_cast<std::size_t>(p.a)], rb = relabel[static_cast<std::size_t>(p.b)];
    auto s = a.source_of(ra, rb);
    if (!s) throw ShapeMismatch("orientation lacks the pair " + std::to_string(ra) + "," + std::to_string(rb));
    arcs.push_back(*s == ra ? Arc{p.a, p.b, p.m} : Arc{p.b, p.a, p.m});
  }
  // Every pair of the contraction must come from some pair of g.
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const PairMult& p : pair_multiplicities(g)) {
    if (Edge(p.a, p.b) == Edge(u, v)) continue;
    Edge e(relabel[static_cast<std::size_t>(p.a)], relabel[static_cast<std::size_t>(p.b)]);
    seen.insert({e.u, e.v});
  }
  if (seen.size() != a.arcs().size()) throw ShapeMismatch("orientation has pairs absent from the contraction");
  return Orientation(g.vertex_count(), std::move(arcs));
}

}  // namespace

Orientation::Orientation(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 1) throw InvalidGraph("an orientation needs at least one vertex");
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.to < 0 || a.from >= n_ || a.to >= n_) throw InvalidGraph("arc endpoint out of range");
    if (a.from == a.to) throw InvalidGraph("loops carry no orientation");
    if (a.multiplicity < 1) throw InvalidGraph("arc multiplicity must be positive");
  }
  std::sort(arcs_.begin(), arcs_.end(), arc_pair_less);
  for (std::size_t i = 1; i < arcs_.size(); ++i)
    if (!arc_pair_less(arcs_[i - 1], arcs_[i])) throw InvalidGraph("pair oriented twice");
  if (!acyclic(n_, arcs_)) throw InvalidGraph("orientation has a directed cycle");
}

Orientation Orientation::from_directions(const Multigraph& g, const std::vector<char>& reversed) {
  auto pairs = pair_multiplicities(g);
  if (reversed.size() != pairs.size()) throw ShapeMismatch("one direction per adjacent pair expected");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    arcs.push_back(reversed[i] ? Arc{p.b, p.a, p.m} : Arc{p.a, p.b, p.m});
  }
  return Orientation(g.vertex_count(), std::move(arcs));
}

int Orientation::out_multiplicity(Vertex v) const {
  int d = 0;
  for (const Arc& a : arcs_)
    if (a.from == v) d += a.multiplicity;
  return d;
}

bool Orientation::is_source(Vertex v) const {
  return std::none_of(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.to == v; });
}

bool Orientation::is_sink(Vertex v) const {
  return std::none_of(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.from == v; });
}

std::vector<Vertex> Orientation::sinks() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

bool Orientation::has_unique_sink_at(Vertex q) const {
  auto s = sinks();
  return s.size() == 1 && s[0] == q;
}

std::optional<Vertex> Orientation::source_of(Vertex u, Vertex v) const {
  Arc key{std::min(u, v), std::max(u, v), 1};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key, arc_pair_less);
  if (it == arcs_.end() || arc_pair_less(key, *it) || u == v) return std::nullopt;
  return it->from;
}

bool Orientation::orients(const Multigraph& g) const {
  if (g.vertex_count() != n_) return false;
  auto pairs = pair_multiplicities(g);
  if (pairs.size() != arcs_.size()) return false;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].a != arcs_[i].lo() || pairs[i].b != arcs_[i].hi() || pairs[i].m != arcs_[i].multiplicity)
      return false;
  return true;
}

Multigraph Orientation::host() const {
  std::vector<Edge> edges;
  for (const Arc& a : arcs_)
    for (int k = 0; k < a.multiplicity; ++k) edges.emplace_back(a.from, a.to);
  return Multigraph(n_, std::move(edges));
}

std::vector<std::string> Orientation::serialize() const {
  std::vector<std::string> out;
  for (const Arc& a : arcs_) out.push_back(std::to_string(a.from) + ">" + std::to_string(a.to));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Orientation::to_string() const {
  std::string s;
  for (const auto& piece : serialize()) {
    if (!s.empty()) s += ",";
    s += piece;
  }
  return s;
}

bool serialization_less(const Orientation& a, const Orientation& b) { return a.serialize() < b.serialize(); }

std::vector<Orientation> enumerate_acyclic(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw InvalidGraph("orientation enumeration supports at most 64 vertices");
  auto pairs = pair_multiplicities(g);
  std::vector<Orientation> out;
  std::vector<char> dir(pairs.size(), 0);
  // reach[x]: bitset of vertices reachable from x along chosen arcs.
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      out.push_back(Orientation::from_directions(g, dir));
      return;
    }
    for (char d = 0; d < 2; ++d) {
      Vertex from = d ? pairs[i].b : pairs[i].a, to = d ? pairs[i].a : pairs[i].b;
      if (reach[static_cast<std::size_t>(to)] >> from & 1U) continue;
      auto saved = reach;
      const std::uint64_t gain = reach[static_cast<std::size_t>(to)] | (std::uint64_t{1} << to);
      for (Vertex x = 0; x < n; ++x)
        if (x == from || (reach[static_cast<std::size_t>(x)] >> from & 1U)) reach[static_cast<std::size_t>(x)] |= gain;
      dir[i] = d;
      self(self, i + 1);
      reach = std::move(saved);
    }
    dir[i] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<Orientation> enumerate_unique_sink(const Multigraph& g, Vertex q) {
  std::vector<Orientation> out;
  for (auto& a : enumerate_acyclic(g))
    if (a.has_unique_sink_at(q)) out.push_back(std::move(a));
  return out;
}

Divisor divisor_of(const Orientation& a) {
  Divisor d = Divisor::zero(a.vertex_count());
  for (Vertex v = 0; v < a.vertex_count(); ++v) d[v] = -1;
  for (const Arc& arc : a.arcs()) d[arc.from] += arc.multiplicity;
  return d;
}

Orientation source_sink_reverse(const Orientation& a, Vertex v) {
  if (v < 0 || v >= a.vertex_count()) throw NotSourceOrSink("vertex out of range");
  if (!a.is_source(v) && !a.is_sink(v))
    throw NotSourceOrSink("vertex " + std::to_string(v) + " is neither a source nor a sink");
  std::vector<Arc> arcs = a.arcs();
  for (Arc& arc : arcs)
    if (arc.from == v || arc.to == v) std::swap(arc.from, arc.to);
  return Orientation(a.vertex_count(), std::move(arcs));
}

namespace {

void check_same_host(const Orientation& a, const Orientation& b) {
  bool same = a.vertex_count() == b.vertex_count() && a.arcs().size() == b.arcs().size();
  for (std::size_t i = 0; same && i < a.arcs().size(); ++i) {
    const Arc &x = a.arcs()[i], &y = b.arcs()[i];
    same = x.lo() == y.lo() && x.hi() == y.hi() && x.multiplicity == y.multiplicity;
  }
  if (!same) throw ShapeMismatch("orientations live on different graphs");
}

// Distances from a over the reversal graph, stopping once target is found.
int bfs(const Orientation& a, const Orientation& target) {
  check_same_host(a, target);
  std::map<Orientation, int> dist{{a, 0}};
  std::deque<Orientation> queue{a};
  while (!queue.empty()) {
    Orientation cur = queue.front();
    queue.pop_front();
    const int d = dist[cur];
    if (cur == target) return d;
    for (Vertex v = 0; v < cur.vertex_count(); ++v) {
      if (!cur.is_source(v) && !cur.is_sink(v)) continue;
      Orientation next = source_sink_reverse(cur, v);
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    }
  }
  return -1;
}

}  // namespace

bool are_equivalent(const Orientation& a, const Orientation& b) {
  check_same_host(a, b);
  return linearly_equivalent(a.host(), divisor_of(a), divisor_of(b));
}

bool reversal_reachable(const Orientation& a, const Orientation& b) { return bfs(a, b) >= 0; }

int reversal_distance(const Orientation& a, const Orientation& b) {
  int d = bfs(a, b);
  if (d < 0) throw NotEquivalent("orientations are not related by source-sink reversals");
  return d;
}

OrientationClassifier::OrientationClassifier(const Multigraph& g, Vertex q)
    : chip_(g, q), reps_(enumerate_unique_sink(g, q)) {
  std::sort(reps_.begin(), reps_.end(), serialization_less);
  for (std::size_t i = 0; i < reps_.size(); ++i) table_.emplace(chip_.reduce(divisor_of(reps_[i])), i);
}

std::size_t OrientationClassifier::index_of(const Orientation& a) const {
  auto it = table_.find(chip_.reduce(divisor_of(a)));
  if (it == table_.end()) throw ShapeMismatch("orientation does not belong to the classified graph");
  return it->second;
}

OrientationClass OrientationClassifier::classify(const Orientation& a) const {
  return {reps_[index_of(a)], sink()};
}

OrientationClass canonical_rep(const Orientation& a, Vertex q) {
  return OrientationClassifier(a.host(), q).classify(a);
}

Orientation lift_plus(const Orientation& a, const Multigraph& g, Vertex u, Vertex v) { return lift(a, g, u, v, u); }

Orientation lift_minus(const Orientation& a, const Multigraph& g, Vertex u, Vertex v) { return lift(a, g, u, v, v); }

Orientation restrict_delete(const Orientation& a, Vertex u, Vertex v) {
  if (u == v) throw SameVertex("edge endpoints coincide");
  std::vector<Arc> arcs;
  bool found = false;
  for (Arc arc : a.arcs()) {
    if (Edge(arc.from, arc.to) == Edge(u, v)) {
      found = true;
      if (--arc.multiplicity == 0) continue;
    }
    arcs.push_back(arc);
  }
  if (!found) throw NoSuchEdge("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  return Orientation(a.vertex_count(), std::move(arcs));
}

std::optional<Orientation> restrict_contract(const Orientation& a, Vertex u, Vertex v) {
  if (u == v) throw SameVertex("edge endpoints coincide");
  if (!a.source_of(u, v)) throw NoSuchEdge("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  auto relabel = merge_relabel(a.vertex_count(), u, v);
  std::map<std::pair<Vertex, Vertex>, Arc> merged;
  for (const Arc& arc : a.arcs()) {
    if (Edge(arc.from, arc.to) == Edge(u, v)) continue;
    Arc r{relabel[static_cast<std::size_t>(arc.from)], relabel[static_cast<std::size_t>(arc.to)], arc.multiplicity};
    auto [it, fresh] = merged.emplace(std::pair{r.lo(), r.hi()}, r);
    if (fresh) continue;
    if (it->second.from != r.from) return std::nullopt;
    it->second.multiplicity += r.multiplicity;
  }
  std::vector<Arc> arcs;
  for (auto& [key, arc] : merged) arcs.push_back(arc);
  if (!acyclic(a.vertex_count() - 1, arcs)) return std::nullopt;
  return Orientation(a.vertex_count() - 1, std::move(arcs));
}

}  // namespace tutteseq
