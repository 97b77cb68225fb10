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

#include "tutteseq/tutte.hpp"

#include <sstream>

namespace tutteseq {

BiPoly BiPoly::monomial(int i, int j, BigInt c) {
  BiPoly p;
  if (c != 0) p.terms_.emplace(Key{i, j}, std::move(c));
  return p;
}

BigInt BiPoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }
  return *this;
}

BiPoly BiPoly::shifted(int i, int j) const {
  BiPoly p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(Key{k.first + i, k.second + j}, c);
  return p;
}

BigInt BiPoly::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt s = 0;
  for (const auto& [k, c] : terms_) s += c * boost::multiprecision::pow(x, static_cast<unsigned>(k.first)) *
                                       boost::multiprecision::pow(y, static_cast<unsigned>(k.second));
  return s;
}

IntPoly BiPoly::at_x_one() const {
  IntPoly p;
  for (const auto& [k, c] : terms_) p += IntPoly::monomial(k.second, static_cast<std::int64_t>(c));
  return p;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    BigInt a = c < 0 ? BigInt(-c) : c;
    bool bare = k.first == 0 && k.second == 0;
    if (a != 1 || bare) os << a;
    if (k.first > 0) os << "x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.second > 0) os << "y" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return os.str();
}

namespace {

using Memo = std::map<std::pair<int, std::vector<Edge>>, BiPoly>;

BiPoly tutte_rec(const Multigraph& g, Memo& memo) {
  auto key = std::pair{g.vertex_count(), g.edges()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int loops = g.loop_count();
  BiPoly result;
  const Edge* pick = nullptr;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (!is_bridge(g, e.u, e.v)) {
      pick = &e;
      break;
    }
  }
  if (!pick) {
    // Only bridges and loops remain.
    result = BiPoly::monomial(g.nonloop_edge_count(), loops);
  } else {
    const Edge e = *pick;
    result = tutte_rec(delete_edge(g, e.u, e.v), memo) + tutte_rec(contract_edge(g, e.u, e.v).graph, memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

BiPoly tutte_polynomial(const Multigraph& g) {
  Memo memo;
  return tutte_rec(g, memo);
}

IntPoly tutte_eval_1_t(const Multigraph& g) { return tutte_polynomial(g).at_x_one(); }

BigInt tutte_eval(const Multigraph& g, const BigInt& x, const BigInt& y) { return tutte_polynomial(g).evaluate(x, y); }

}  // namespace tutteseq
