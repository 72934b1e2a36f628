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

// Ground truth for small instances. Nothing here touches the KKT or MILP
// machinery: the brute-force solver walks the vertices of the polyhedron
// {x in X, A x + B y >= a, C x + D y >= b}, on which some optimal solution
// of a linear bilevel problem always lies, and keeps those whose y is a
// follower optimum.

#pragma once

#include "blvl/model.hpp"
#include "blvl/simplex.hpp"
#include "blvl/vertex_enum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blvl {

/// Point of the lifted problem.
struct LiftedPoint {
  VecQ x;
  VecQ y;
  Rat epsilon{0};
};

/// The (x, y) polyhedron cut out by X, the coupling rows and the lower rows.
Polyhedron<Rat> combined_polyhedron(const BilevelInstance& inst);

/// Throws InfeasibleError when no vertex is bilevel feasible,
/// UnboundedError when unbounded_ray_certificate finds a ray and
/// UnboundedPolyhedronError for any other unbounded combined polyhedron.
/// Ties are broken towards the lexicographically smallest (x, y).
BilevelSolution solve_bilevel_bruteforce(const BilevelInstance& inst);

/// When the combined polyhedron is pointed but unbounded: a description of a
/// bilevel-feasible vertex and an improving extreme ray along which the
/// follower reply stays optimal, if one exists. Such a ray proves the
/// leader objective unbounded below; nullopt decides nothing.
std::optional<std::string> unbounded_ray_certificate(const BilevelInstance& inst);

/// Every bilevel-feasible vertex of the combined polyhedron, sorted
/// lexicographically.
std::vector<std::pair<VecQ, VecQ>> bilevel_feasible_vertices(const BilevelInstance& inst);

/// Checks x in X, the coupling rows, the lower rows and follower optimality
/// of y; each failure is listed with its exact residual.
FeasibilityReport check_bilevel_feasible(const BilevelInstance& inst, const VecQ& x, const VecQ& y);

/// Bilevel feasibility for the lifted problem: x in X, eps = 0, and (y, eps)
/// optimal for the lifted follower LP.
FeasibilityReport check_lifted_feasible(const LiftedInstance& lifted, const LiftedPoint& point);

/// (x, y) -> (x, y, eps) with eps = max(0, max_i (a - A x - B y)_i), the
/// smallest eps keeping the lifted coupling rows satisfied. Throws
/// ValidationError when y violates the lower rows at x.
LiftedPoint lift_point(const BilevelInstance& inst, const VecQ& x, const VecQ& y);

struct SampleRecord {
  VecQ x;
  LpStatus status = LpStatus::Infeasible;
  std::optional<VecQ> y;          // follower reply when the lower level is solved
  bool coupling_ok = false;
  std::optional<Rat> objective;   // c.x + d.y at the reply
};

struct Interval {
  Rat lo{0};
  Rat hi{0};
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SampleReport {
  std::vector<SampleRecord> records;
  bool has_intervals = false;        // true when n == 1
  std::vector<Interval> intervals;   // maximal closed bilevel-feasible intervals
};

/// Optimistic follower reply at x: among follower optima, one satisfying the
/// coupling rows if any exists (minimizing d.y), else the one minimizing d.y.
SampleRecord sample_point(const BilevelInstance& inst, const VecQ& x);

/// Walks x = base + t e_axis over t = from, from + step, ..., <= to. For
/// n == 1 also reports the exact bilevel-feasible intervals inside
/// [from, to] and checks that every grid point agrees with them.
SampleReport sample_induced_set(const BilevelInstance& inst, Index axis, const Rat& from, const Rat& to,
                                const Rat& step);

/// Exact maximal closed intervals of bilevel-feasible x in [from, to]; n == 1.
std::vector<Interval> induced_intervals(const BilevelInstance& inst, const Rat& from, const Rat& to);

/// Comma-separated records `x, status, y, coupling_ok, objective`, with
/// `# interval lo hi` comment lines appended.
std::string format_samples(const SampleReport& report);

}  // namespace blvl
