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
#include "blvl/simplex.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blvl {

/// Optimistic linear bilevel problem
///
///     min_{x, y}  c^T x + d^T y
///     s.t.        G x >= g                  (x in X)
///                 A x + B y >= a            (coupling rows)
///                 y in argmin { f^T y : C x + D y >= b }.
///
/// All rows are stored in >= form. k = 0 means no coupling rows.
struct BilevelInstance {
  Index n = 0;
  Index m = 0;
  VecQ c, d, f;
  MatQ G;
  VecQ g;
  MatQ A, B;
  VecQ a;
  MatQ C, D;
  VecQ b;

  Index p() const { return G.rows(); }
  Index k() const { return a.size(); }
  Index l() const { return b.size(); }

  Rat leader_objective(const VecQ& x, const VecQ& y) const { return dot(c, x) + dot(d, y); }

  /// Empty instance of the given shape with all data zero.
  static BilevelInstance zeros(Index n, Index m, Index p, Index k, Index l);

  friend bool operator==(const BilevelInstance& lhs, const BilevelInstance& rhs);
};

/// Every dimensional inconsistency, each message prefixed with the block it
/// concerns ("objective", "X", "coupling", "lower"). Empty iff valid.
std::vector<std::string> validate(const BilevelInstance& inst);

/// Reads the JSON instance format. Throws ParseError on malformed text, bad
/// rational literals, duplicate/missing/unknown fields and dimension
/// mismatches.
BilevelInstance parse_instance(std::string_view text);

/// Canonical text: fixed field order and layout, rationals in lowest terms.
std::string serialize_instance(const BilevelInstance& inst);

/// The instance with its coupling rows moved into the follower problem:
///
///     lower level  min f^T y   s.t.  A x + B y + eps e >= a,
///                                    C x + D y         >= b,
///                                    eps               >= 0,
///
/// and eps = 0 as the only remaining coupling constraint. The follower's
/// variables are (y, eps); eps sits at `epsilon_index` == base.m.
struct LiftedInstance {
  BilevelInstance base;
  Index epsilon_index = 0;

  Index follower_count() const { return base.m + 1; }
  Index lower_rows() const { return base.k() + base.l() + 1; }

  MatQ lower_C() const;
  MatQ lower_D() const;
  VecQ lower_b() const;
  VecQ follower_objective() const;

  /// Plain instance form: follower variables (y, eps) and eps = 0 written as
  /// the coupling pair eps >= 0, -eps >= 0.
  BilevelInstance as_instance() const;
};

enum class VarType { Continuous, Binary };

struct Variable {
  std::string name;
  VarType type = VarType::Continuous;
  std::optional<Rat> lower;
  std::optional<Rat> upper;
};

struct LinearRow {
  std::string name;
  VecQ coefficients;
  Sense sense = Sense::GreaterEqual;
  Rat rhs{0};
};

/// Mixed-binary linear model: minimize objective . v + objective_constant.
struct MilpModel {
  std::vector<Variable> variables;
  std::vector<LinearRow> rows;
  VecQ objective = VecQ(0);
  Rat objective_constant{0};

  Index num_vars() const { return static_cast<Index>(variables.size()); }
  Index num_rows() const { return static_cast<Index>(rows.size()); }

  /// Appends a variable; existing rows and the objective gain a zero entry.
  Index add_variable(std::string name, VarType type, std::optional<Rat> lower = std::nullopt,
                     std::optional<Rat> upper = std::nullopt);
  Index add_binary(std::string name) { return add_variable(std::move(name), VarType::Binary, Rat(0), Rat(1)); }
  void add_row(std::string name, VecQ coefficients, Sense sense, Rat rhs);

  std::optional<Index> find_variable(std::string_view name) const;
  std::optional<Index> find_row(std::string_view name) const;
  std::vector<Index> binaries() const;

  /// LP with every binary relaxed to [0, 1].
  LpModel<Rat> relaxation() const;

  Rat evaluate(const VecQ& point) const { return dot(objective, point) + objective_constant; }

  /// Violated rows, bounds and integrality conditions of `point`.
  std::vector<std::string> check(const VecQ& point) const;
};

std::vector<std::string> validate(const MilpModel& model);

enum class Method { Oracle, KktMilp, Penalty };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct Violation {
  std::string condition;
  Rat residual{0};  // amount by which the condition fails
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  std::string describe() const;
};

/// A point of the bilevel problem together with how it was obtained.
/// objective == c.x + d.y, plus kappa * epsilon for the penalty method.
struct BilevelSolution {
  VecQ x;
  VecQ y;
  std::optional<Rat> epsilon;
  std::optional<Rat> kappa;
  Rat objective{0};
  Method method = Method::Oracle;
  FeasibilityReport certificate;
};

/// Objective recomputed from the point (includes kappa * epsilon when both
/// are present and the method is the penalty method).
Rat recompute_objective(const BilevelInstance& inst, const BilevelSolution& sol);

std::string serialize_solution(const BilevelSolution& sol);
BilevelSolution parse_solution(std::string_view text);

}  // namespace blvl
