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

// Reformulation chain for removing coupling constraints:
//
//   lift_coupling     coupling rows move into the follower problem with a
//                     shared violation variable eps; eps = 0 stays upstairs.
//   kkt_reformulate   follower LP replaced by primal feasibility,
//                     stationarity B^T lambda + D^T mu = f, e^T lambda + eta = 0,
//                     sign constraints and complementarity pairs.
//   linearize_big_m   each pair (v, s) becomes v <= (1 - z) M, s <= z M.
//   penalize          drops eps = 0 and adds kappa * eps to the objective,
//                     which is the KKT form of a bilevel problem without
//                     coupling constraints.
//   auto_kappa        doubles kappa from 1 until the penalized optimum has
//                     eps = 0, then certifies the projected point.

#pragma once

#include "blvl/branch_bound.hpp"
#include "blvl/model.hpp"
#include "blvl/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blvl {

/// Variable offsets shared by the complementarity system and the MILPs
/// built from it: x, y, eps, lambda, mu, eta, then (MILP only) z_lambda,
/// z_mu, z_eta.
struct KktLayout {
  Index n = 0, m = 0, k = 0, l = 0;
  Index x = 0, y = 0, eps = 0, lambda = 0, mu = 0, eta = 0;
  Index num_continuous = 0;
};

/// variable * (expression . v - constant) = 0 with both factors >= 0.
struct ComplementarityPair {
  std::string name;
  Index variable = 0;
  VecQ expression;
  Rat constant{0};
};

struct ComplementaritySystem {
  KktLayout layout;
  std::vector<Variable> variables;
  std::vector<LinearRow> rows;   // every linear row, including eps = 0
  std::vector<ComplementarityPair> pairs;
  VecQ objective;                // c on x, d on y
  Index epsilon_zero_row = 0;

  /// Rows, sign bounds and complementarity of `point`.
  std::vector<std::string> check(const VecQ& point) const;
};

LiftedInstance lift_coupling(const BilevelInstance& inst);

/// Drops eps.
struct BilevelPoint {
  VecQ x;
  VecQ y;
};
BilevelPoint project_solution(const LiftedPoint& point);

ComplementaritySystem kkt_reformulate(const LiftedInstance& lifted);

/// Pieces of the big-M computation, exposed for tests and reporting.
struct BigMBounds {
  Rat epsilon_cap{0};  // max coupling violation over the lower-level region, plus 1
  Rat primal{0};       // max |coordinate| and |slack| over the truncated primal polytope
  Rat dual{0};         // max |coordinate| over vertices of the dual polyhedron
  Rat big_m{1};        // max(2 max(primal, dual), 1)
};

BigMBounds big_m_bounds(const LiftedInstance& lifted);

/// Throws UnboundedPolyhedronError when the primal region is unbounded.
Rat bound_big_m(const LiftedInstance& lifted);

/// max |mu|, |lambda|, |eta| over the vertices of
/// {(lambda, mu, eta) >= 0 : B^T lambda + D^T mu = f, e^T lambda + eta = 0}.
Rat dual_vertex_bound(const LiftedInstance& lifted);

MilpModel linearize_big_m(const ComplementaritySystem& sys, const Rat& big_m);
MilpModel penalize(const ComplementaritySystem& sys, const Rat& big_m, const Rat& kappa);

/// Layout of the MILPs above: binaries follow the continuous block in pair
/// order.
inline Index binary_offset(const KktLayout& layout) { return layout.num_continuous; }

/// lambda == 0 and eta == 0 at `point`.
bool forced_duals_vanish(const KktLayout& layout, const VecQ& point);

/// Solves the linearized KKT MILP with 2M and compares optimal values.
bool big_m_stable(const ComplementaritySystem& sys, const Rat& big_m, const std::optional<Rat>& kappa);

/// KKT-MILP solve of the lifted problem. Throws InfeasibleError /
/// UnboundedError on the corresponding MILP status and CertificationError
/// when the optimum fails the oracle check.
BilevelSolution solve_kkt(const BilevelInstance& inst);

/// Penalized solve at a fixed kappa. The certificate reports bilevel
/// feasibility of the projected point; eps may be positive.
BilevelSolution solve_penalty(const BilevelInstance& inst, const Rat& kappa);

struct KappaStep {
  Rat kappa{0};
  Rat value{0};
  Rat epsilon{0};
};

struct AutoKappaOptions {
  Rat initial{1};
  int max_doublings = 64;
};

struct AutoKappaResult {
  Rat kappa{0};
  BilevelSolution solution;
  Rat big_m{0};
  std::vector<KappaStep> steps;
};

/// Penalty loop kappa = 1, 2, 4, ... until eps = 0 at the optimum. Throws
/// InfeasibleError when no feasible point has eps = 0, LimitError after
/// max_doublings, CertificationError when the result fails the oracle check.
AutoKappaResult auto_kappa(const BilevelInstance& inst, const AutoKappaOptions& options = {});

/// Builds a bilevel solution from a MILP (or system) point.
BilevelSolution extract_solution(const KktLayout& layout, const VecQ& point);

std::string serialize_system(const ComplementaritySystem& sys);
std::string serialize_milp(const MilpModel& model, const Rat& big_m, const std::optional<Rat>& kappa);

}  // namespace blvl
