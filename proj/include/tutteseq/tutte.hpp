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

#include <map>
#include <string>
#include <utility>

#include "tutteseq/multigraph.hpp"
#include "tutteseq/poly.hpp"

namespace tutteseq {

/// Bivariate big-integer polynomial in x, y; zero coefficients are not stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly monomial(int i, int j, BigInt c = 1);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }

  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  /// Multiply by x^i y^j.
  BiPoly shifted(int i, int j) const;

  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  /// Substitute x = 1.
  IntPoly at_x_one() const;
  std::string to_string() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::map<Key, BigInt> terms_;
};

/// Memoized deletion-contraction.
BiPoly tutte_polynomial(const Multigraph& g);
/// T(1, t).
IntPoly tutte_eval_1_t(const Multigraph& g);
BigInt tutte_eval(const Multigraph& g, const BigInt& x, const BigInt& y);

}  // namespace tutteseq
