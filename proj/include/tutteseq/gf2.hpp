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

namespace tutteseq {

/// Sparse GF(2) vector: strictly increasing column indices.
using SparseRow = std::vector<std::uint32_t>;

/// a ^= b on sorted index lists.
void xor_into(SparseRow& a, const SparseRow& b);

/// Sort and cancel repeated indices in pairs.
void normalize(SparseRow& r);

/// Row echelon basis over GF(2). Each stored row's smallest column is its
/// pivot and no two rows share a pivot.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t columns = 0) : pivot_(columns, -1) {}

  std::size_t columns() const { return pivot_.size(); }
  std::size_t rank() const { return rows_.size(); }

  /// Reduce against the basis; the empty row means "in the span".
  SparseRow reduce(SparseRow r) const;
  bool contains(const SparseRow& r) const { return reduce(r).empty(); }
  /// Adds r if it is independent; returns whether it was.
  bool insert(SparseRow r);

 private:
  std::vector<std::int32_t> pivot_;
  std::vector<SparseRow> rows_;
};

}  // namespace tutteseq
