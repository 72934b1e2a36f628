// Copyright 2026 The blvl Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include "blvl/rat.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace blvl {

/// Incrementally built row-echelon form of an augmented system [a | beta].
/// Rows are reduced against the stored pivots on insertion, so a dependent
/// row is detected in O(rank * dim) and rejected without changing state.
template <typename Scalar>
class Echelon {
 public:
  explicit Echelon(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  enum class Insert { Independent, Dependent, Inconsistent };

  /// Adds a . z = beta. Dependent-but-consistent rows are dropped;
  /// Inconsistent means the row contradicts earlier ones.
  Insert push(const VectorX<Scalar>& coeffs, const Scalar& beta) {
    VectorX<Scalar> row = coeffs;
    Scalar rhs = beta;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Index pc = pivot_[r];
      if (row(pc) == 0) continue;
      const Scalar factor = row(pc) / rows_[r](pc);
      for (Index j = pc; j < dim_; ++j)
        if (rows_[r](j) != 0) row(j) -= factor * rows_[r](j);
      rhs -= factor * rhs_[r];
    }
    Index pc = -1;
    for (Index j = 0; j < dim_; ++j)
      if (row(j) != 0) {
        pc = j;
        break;
      }
    if (pc < 0) return rhs == 0 ? Insert::Dependent : Insert::Inconsistent;
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
    pivot_.push_back(pc);
    return Insert::Independent;
  }

  void pop() {
    rows_.pop_back();
    rhs_.pop_back();
    pivot_.pop_back();
  }

  /// Unique solution once rank == dim.
  VectorX<Scalar> solve() const {
    VectorX<Scalar> z = VectorX<Scalar>::Zero(dim_);
    // Pivot columns are distinct; process rows in decreasing pivot order.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] > pivot_[b]; });
    for (std::size_t r : order) {
      const Index pc = pivot_[r];
      Scalar acc = rhs_[r];
      for (Index j = pc + 1; j < dim_; ++j)
        if (rows_[r](j) != 0 && z(j) != 0) acc -= rows_[r](j) * z(j);
      z(pc) = acc / rows_[r](pc);
    }
    return z;
  }

 private:
  Index dim_;
  std::vector<VectorX<Scalar>> rows_;
  std::vector<Scalar> rhs_;
  std::vector<Index> pivot_;
};

/// Rank of a matrix over an exact field.
template <typename Derived>
Index exact_rank(const Eigen::MatrixBase<Derived>& mat) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> ech(mat.cols());
  for (Index i = 0; i < mat.rows(); ++i) ech.push(mat.row(i).transpose(), Scalar(0));
  return ech.rank();
}

/// Solution of the square system M z = h, or nullopt when M is singular.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_square(const MatrixX<Scalar>& M, const VectorX<Scalar>& h) {
  Echelon<Scalar> ech(M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    if (ech.push(M.row(i).transpose(), h(i)) != Echelon<Scalar>::Insert::Independent) return std::nullopt;
  if (ech.rank() != M.cols()) return std::nullopt;
  return ech.solve();
}

}  // namespace blvl
