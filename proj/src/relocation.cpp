// Copyright 2026 The chebwalk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "chebwalk/relocation.hpp"

#include <algorithm>
#include <vector>

namespace chebwalk {

Index relocated_column(Index row, Index col) {
  if (col == 0) {
    return row;
  }
  if (col == row) {
    return 0;
  }
  return col;
}

namespace {

SparseHermitianMatrix build_dilation(const SparseHermitianMatrix &a) {
  const Index n = a.dimension();
  std::vector<Entry> upper;
  std::vector<Index> row_count(n, 0);
  std::vector<Index> col_count(n, 0);
  for (Index i = 0; i < n; ++i) {
    for (const RowEntry &e : a.row(i)) {
      const Index j = relocated_column(i, e.col);
      upper.push_back({i, n + j, e.value});
      ++row_count[i];
      ++col_count[j];
    }
  }
  const Index widest = std::max(
      *std::max_element(row_count.begin(), row_count.end()),
      *std::max_element(col_count.begin(), col_count.end()));
  const Index sparsity = std::max({a.sparsity(), widest, Index{1}});
  return SparseHermitianMatrix::from_entries(2 * n, sparsity, upper);
}

} // namespace

RelocatedMatrix::RelocatedMatrix(SparseHermitianMatrix base)
    : base_(std::move(base)), dilation_(build_dilation(base_)) {}

Complex RelocatedMatrix::entry(Index i, Index j) const {
  return base_.entry(i, relocated_column(i, j));
}

RelocatedMatrix relocate_diagonal(const SparseHermitianMatrix &a) {
  return RelocatedMatrix(a);
}

} // namespace chebwalk
