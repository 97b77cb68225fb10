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

#include "tutteseq/gf2.hpp"

#include <algorithm>
#include <iterator>

namespace tutteseq {

void xor_into(SparseRow& a, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a.swap(out);
}

void normalize(SparseRow& r) {
  std::sort(r.begin(), r.end());
  SparseRow out;
  out.reserve(r.size());
  for (std::size_t i = 0; i < r.size();) {
    std::size_t j = i;
    while (j < r.size() && r[j] == r[i]) ++j;
    if ((j - i) % 2) out.push_back(r[i]);
    i = j;
  }
  r.swap(out);
}

SparseRow SparseEchelon::reduce(SparseRow r) const {
  while (!r.empty()) {
    std::int32_t p = pivot_[r.front()];
    if (p < 0) break;
    xor_into(r, rows_[static_cast<std::size_t>(p)]);
  }
  return r;
}

bool SparseEchelon::insert(SparseRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  pivot_[r.front()] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

}  // namespace tutteseq
