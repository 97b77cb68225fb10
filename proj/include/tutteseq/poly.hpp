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
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tutteseq {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate integer polynomial in t, ascending coefficients, no
/// trailing zeros (the zero polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> coeffs);
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  /// t^k
  static IntPoly monomial(int k, std::int64_t c = 1);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t operator[](int k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t at_one() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human form, e.g. "2 + t" or "1 - 3t + t^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// (1 - t)^k
IntPoly one_minus_t_pow(int k);

}  // namespace tutteseq
