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

// Combinatorial vertex enumeration: every dim-sized set of linearly
// independent rows (equalities always included) is solved exactly and kept
// when the intersection point satisfies the whole system. Intended for
// small systems only; the work grows like C(rows, dim).

#pragma once

#include "blvl/errors.hpp"
#include "blvl/linalg.hpp"
#include "blvl/rat.hpp"
#include "blvl/simplex.hpp"

#include <map>
#include <vector>

namespace blvl {

/// { z : A.topRows(num_equalities) z = b.head(num_equalities),
///       A.bottomRows(rest) z >= b.tail(rest) }
template <typename Scalar>
struct Polyhedron {
  MatrixX<Scalar> A;
  VectorX<Scalar> b;
  Index num_equalities = 0;

  Index dim() const { return A.cols(); }
  Index num_rows() const { return A.rows(); }

  bool contains(const VectorX<Scalar>& z) const {
    const VectorX<Scalar> act = times(A, z);
    for (Index i = 0; i < A.rows(); ++i) {
      if (i < num_equalities ? act(i) != b(i) : act(i) < b(i)) return false;
    }
    return true;
  }

  /// Rows tight at z, in increasing order.
  std::vector<Index> active_rows(const VectorX<Scalar>& z) const {
    const VectorX<Scalar> act = times(A, z);
    std::vector<Index> out;
    for (Index i = 0; i < A.rows(); ++i)
      if (act(i) == b(i)) out.push_back(i);
    return out;
  }

  LpModel<Scalar> as_lp() const {
    LpModel<Scalar> lp(dim());
    lp.A = A;
    lp.rhs = b;
    for (Index i = 0; i < A.rows(); ++i)
      lp.sense.push_back(i < num_equalities ? Sense::Equal : Sense::GreaterEqual);
    return lp;
  }
};

template <typename Scalar>
struct VertexList {
  Index dim = 0;
  std::vector<VectorX<Scalar>> vertices;     // lexicographically sorted
  std::vector<std::vector<Index>> active;    // all tight rows per vertex
};

namespace detail {

template <typename Scalar>
struct LexLess {
  bool operator()(const VectorX<Scalar>& lhs, const VectorX<Scalar>& rhs) const {
    for (Index i = 0; i < lhs.size(); ++i) {
      if (lhs(i) < rhs(i)) return true;
      if (rhs(i) < lhs(i)) return false;
    }
    return false;
  }
};

template <typename Scalar>
class VertexSearch {
 public:
  explicit VertexSearch(const Polyhedron<Scalar>& poly) : poly_(poly), ech_(poly.dim()) {}

  /// False when the equality rows are inconsistent.
  bool seed_equalities() {
    for (Index i = 0; i < poly_.num_equalities; ++i) {
      const auto res = ech_.push(poly_.A.row(i).transpose(), poly_.b(i));
      if (res == Echelon<Scalar>::Insert::Inconsistent) return false;
    }
    return true;
  }

  void run() { descend(poly_.num_equalities); }

  std::map<VectorX<Scalar>, bool, LexLess<Scalar>> found;

 private:
  void descend(Index next_row) {
    if (ech_.rank() == poly_.dim()) {
      VectorX<Scalar> z = ech_.solve();
      if (!found.count(z) && poly_.contains(z)) found.emplace(std::move(z), true);
      return;
    }
    const Index needed = poly_.dim() - ech_.rank();
    for (Index i = next_row; i + needed <= poly_.num_rows(); ++i) {
      if (ech_.push(poly_.A.row(i).transpose(), poly_.b(i)) != Echelon<Scalar>::Insert::Independent) continue;
      descend(i + 1);
      ech_.pop();
    }
  }

  const Polyhedron<Scalar>& poly_;
  Echelon<Scalar> ech_;
};

/// True when the recession cone of a pointed polyhedron is nontrivial.
/// For full-column-rank A, a nonzero cone direction d has A_ineq d >= 0
/// with positive sum, which a single LP detects.
template <typename Scalar>
bool has_recession_direction(const Polyhedron<Scalar>& poly) {
  LpModel<Scalar> lp(poly.dim());
  VectorX<Scalar> total = VectorX<Scalar>::Zero(poly.dim());
  for (Index i = 0; i < poly.num_rows(); ++i) {
    const bool eq = i < poly.num_equalities;
    lp.add_row(poly.A.row(i).transpose(), eq ? Sense::Equal : Sense::GreaterEqual, Scalar(0));
    if (!eq) total += poly.A.row(i).transpose();
  }
  lp.add_row(total, Sense::GreaterEqual, Scalar(1));
  return solve_lp(lp).status != LpStatus::Infeasible;
}

}  // namespace detail

/// All vertices of `poly`. With `require_bounded`, a nonempty polyhedron
/// that is unbounded (or whose rows do not span the space) throws
/// UnboundedPolyhedronError. Without it, the vertices of a pointed but
/// unbounded polyhedron are still listed.
template <typename Scalar>
VertexList<Scalar> enumerate_vertices(const Polyhedron<Scalar>& poly, bool require_bounded = true) {
  if (poly.b.size() != poly.num_rows() || poly.num_equalities > poly.num_rows())
    throw ValidationError("polyhedron has inconsistent dimensions");
  VertexList<Scalar> out;
  out.dim = poly.dim();
  if (exact_rank(poly.A) < poly.dim()) {
    // Lineality space is nontrivial: no vertices at all.
    if (solve_lp(poly.as_lp()).status == LpStatus::Infeasible) return out;
    throw UnboundedPolyhedronError("dimension-deficient system: rows span " +
                                   std::to_string(exact_rank(poly.A)) + " of " + std::to_string(poly.dim()) +
                                   " dimensions");
  }
  detail::VertexSearch<Scalar> search(poly);
  if (!search.seed_equalities()) return out;
  search.run();
  if (require_bounded && !search.found.empty() && detail::has_recession_direction(poly))
    throw UnboundedPolyhedronError("polyhedron is unbounded");
  for (auto& [z, unused] : search.found) {
    out.active.push_back(poly.active_rows(z));
    out.vertices.push_back(z);
  }
  return out;
}

}  // namespace blvl
