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

#include "tutteseq/poly.hpp"

#include <algorithm>
#include <sstream>

namespace tutteseq {

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int k, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

std::int64_t IntPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

std::int64_t IntPoly::at_one() const {
  std::int64_t s = 0;
  for (auto x : c_) s += x;
  return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::int64_t c = c_[k];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly one_minus_t_pow(int k) {
  IntPoly r{1};
  const IntPoly f{1, -1};
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

}  // namespace tutteseq
