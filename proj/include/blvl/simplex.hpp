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

// Dense-tableau primal simplex over an exact ordered field.
//
// The model is
//
//     min  c^T x   s.t.  A_i x (>=, <=, =) b_i,   l_j <= x_j <= u_j,
//
// with every bound optional. Pivoting follows Bland's rule, so the solver
// terminates on degenerate problems and is deterministic. Every outcome
// carries a certificate that is re-verified by plain arithmetic before
// it is returned:
//
//   * Optimal:    primal point, row duals and bound duals with exact strong
//                 duality and complementary slackness.
//   * Infeasible: Farkas multipliers (y, lower, upper) with
//                 A^T y + lower - upper = 0 and b^T y + l^T lower - u^T upper > 0.
//   * Unbounded:  a feasible point and a ray d with c^T d < 0.

#pragma once

#include "blvl/errors.hpp"
#include "blvl/rat.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blvl {

enum class Sense { GreaterEqual, LessEqual, Equal };

inline std::string_view to_string(Sense sense) {
  switch (sense) {
    case Sense::GreaterEqual: return ">=";
    case Sense::LessEqual: return "<=";
    case Sense::Equal: return "=";
  }
  return "?";
}

template <typename Scalar>
struct LpModel {
  MatrixX<Scalar> A;
  std::vector<Sense> sense;
  VectorX<Scalar> rhs;
  VectorX<Scalar> objective;
  std::vector<std::optional<Scalar>> lower;
  std::vector<std::optional<Scalar>> upper;

  LpModel() = default;
  explicit LpModel(Index num_vars)
      : A(0, num_vars), rhs(0), objective(num_vars), lower(num_vars), upper(num_vars) {
    objective.setZero();
  }

  Index num_vars() const { return objective.size(); }
  Index num_rows() const { return A.rows(); }

  void add_row(const VectorX<Scalar>& coeffs, Sense row_sense, const Scalar& value) {
    const Index r = A.rows();
    A.conservativeResize(r + 1, num_vars());
    A.row(r) = coeffs.transpose();
    rhs.conservativeResize(r + 1);
    rhs(r) = value;
    sense.push_back(row_sense);
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

/// Multipliers for the rows and for the lower/upper variable bounds.
/// Row signs follow the row sense (>= rows nonnegative, <= rows
/// nonpositive); bound multipliers are always nonnegative.
template <typename Scalar>
struct Multipliers {
  VectorX<Scalar> rows;
  VectorX<Scalar> lower;
  VectorX<Scalar> upper;
};

template <typename Scalar>
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  VectorX<Scalar> x;  // optimum, or a feasible point when unbounded
  Scalar objective{0};
  Multipliers<Scalar> duals;   // optimal only
  Multipliers<Scalar> farkas;  // infeasible only
  VectorX<Scalar> ray;         // unbounded only
  std::int64_t pivots = 0;
};

/// Process-wide tally of verified outcomes; the acceptance suite reads it.
struct LpAudit {
  std::atomic<std::uint64_t> optimal{0};
  std::atomic<std::uint64_t> infeasible{0};
  std::atomic<std::uint64_t> unbounded{0};
};

inline LpAudit& lp_audit() {
  static LpAudit audit;
  return audit;
}

namespace detail {

template <typename Scalar>
bool satisfies(const Scalar& activity, Sense sense, const Scalar& rhs) {
  switch (sense) {
    case Sense::GreaterEqual: return activity >= rhs;
    case Sense::LessEqual: return activity <= rhs;
    case Sense::Equal: return activity == rhs;
  }
  return false;
}

template <typename Scalar>
bool sign_ok(const Scalar& multiplier, Sense sense) {
  switch (sense) {
    case Sense::GreaterEqual: return multiplier >= 0;
    case Sense::LessEqual: return multiplier <= 0;
    case Sense::Equal: return true;
  }
  return false;
}

template <typename Scalar>
VectorX<Scalar> transpose_times(const MatrixX<Scalar>& A, const VectorX<Scalar>& y) {
  VectorX<Scalar> out = VectorX<Scalar>::Zero(A.cols());
  for (Index i = 0; i < A.rows(); ++i) {
    if (y(i) == 0) continue;
    for (Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) out(j) += A(i, j) * y(i);
  }
  return out;
}

}  // namespace detail

/// Lists every violated row or bound of `x`. Empty means feasible.
template <typename Scalar>
std::vector<std::string> check_primal(const LpModel<Scalar>& model, const VectorX<Scalar>& x) {
  std::vector<std::string> issues;
  if (x.size() != model.num_vars()) {
    issues.push_back("point has wrong dimension");
    return issues;
  }
  const VectorX<Scalar> activity = times(model.A, x);
  for (Index i = 0; i < model.num_rows(); ++i)
    if (!detail::satisfies(activity(i), model.sense[i], model.rhs(i)))
      issues.push_back("row " + std::to_string(i) + " violated");
  for (Index j = 0; j < model.num_vars(); ++j) {
    const auto& lo = model.lower[j];
    const auto& up = model.upper[j];
    if (lo && x(j) < *lo) issues.push_back("lower bound of variable " + std::to_string(j));
    if (up && x(j) > *up) issues.push_back("upper bound of variable " + std::to_string(j));
  }
  return issues;
}

namespace detail {

/// Sign and support checks shared by dual and Farkas certificates, and the
/// stationarity residual c - A^T y - lower + upper (which must vanish).
template <typename Scalar>
std::vector<std::string> check_multipliers(const LpModel<Scalar>& model,
                                           const Multipliers<Scalar>& mult,
                                           const VectorX<Scalar>& cost) {
  std::vector<std::string> issues;
  const Index n = model.num_vars();
  if (mult.rows.size() != model.num_rows() || mult.lower.size() != n || mult.upper.size() != n) {
    issues.push_back("multiplier dimensions");
    return issues;
  }
  for (Index i = 0; i < model.num_rows(); ++i)
    if (!sign_ok(mult.rows(i), model.sense[i]))
      issues.push_back("multiplier sign of row " + std::to_string(i));
  for (Index j = 0; j < n; ++j) {
    if (mult.lower(j) < 0 || (!model.lower[j] && mult.lower(j) != 0))
      issues.push_back("lower-bound multiplier of variable " + std::to_string(j));
    if (mult.upper(j) < 0 || (!model.upper[j] && mult.upper(j) != 0))
      issues.push_back("upper-bound multiplier of variable " + std::to_string(j));
  }
  const VectorX<Scalar> aty = transpose_times(model.A, mult.rows);
  for (Index j = 0; j < n; ++j)
    if (cost(j) != aty(j) + mult.lower(j) - mult.upper(j))
      issues.push_back("stationarity of variable " + std::to_string(j));
  return issues;
}

template <typename Scalar>
Scalar dual_objective(const LpModel<Scalar>& model, const Multipliers<Scalar>& mult) {
  Scalar value = dot(model.rhs, mult.rows);
  for (Index j = 0; j < model.num_vars(); ++j) {
    if (model.lower[j] && mult.lower(j) != 0) value += *model.lower[j] * mult.lower(j);
    if (model.upper[j] && mult.upper(j) != 0) value -= *model.upper[j] * mult.upper(j);
  }
  return value;
}

}  // namespace detail

/// Exact certificate check; empty result means the outcome is proven.
template <typename Scalar>
std::vector<std::string> verify_outcome(const LpModel<Scalar>& model,
                                        const LpOutcome<Scalar>& outcome) {
  std::vector<std::string> issues;
  const Index n = model.num_vars();
  switch (outcome.status) {
    case LpStatus::Optimal: {
      issues = check_primal(model, outcome.x);
      if (!issues.empty()) return issues;
      auto dual_issues = detail::check_multipliers(model, outcome.duals, model.objective);
      issues.insert(issues.end(), dual_issues.begin(), dual_issues.end());
      if (!issues.empty()) return issues;
      if (dot(model.objective, outcome.x) != outcome.objective)
        issues.push_back("reported objective differs from c^T x");
      if (detail::dual_objective(model, outcome.duals) != outcome.objective)
        issues.push_back("strong duality gap");
      const VectorX<Scalar> activity = times(model.A, outcome.x);
      for (Index i = 0; i < model.num_rows(); ++i)
        if (outcome.duals.rows(i) != 0 && activity(i) != model.rhs(i))
          issues.push_back("complementary slackness of row " + std::to_string(i));
      for (Index j = 0; j < n; ++j) {
        if (outcome.duals.lower(j) != 0 && outcome.x(j) != *model.lower[j])
          issues.push_back("complementary slackness of lower bound " + std::to_string(j));
        if (outcome.duals.upper(j) != 0 && outcome.x(j) != *model.upper[j])
          issues.push_back("complementary slackness of upper bound " + std::to_string(j));
      }
      break;
    }
    case LpStatus::Infeasible: {
      issues = detail::check_multipliers(model, outcome.farkas, VectorX<Scalar>::Zero(n).eval());
      if (issues.empty() && detail::dual_objective(model, outcome.farkas) <= 0)
        issues.push_back("Farkas combination is not contradictory");
      break;
    }
    case LpStatus::Unbounded: {
      issues = check_primal(model, outcome.x);
      if (outcome.ray.size() != n) {
        issues.push_back("ray has wrong dimension");
        break;
      }
      const VectorX<Scalar> slope = times(model.A, outcome.ray);
      for (Index i = 0; i < model.num_rows(); ++i)
        if (!detail::satisfies(slope(i), model.sense[i], Scalar(0)))
          issues.push_back("ray leaves row " + std::to_string(i));
      for (Index j = 0; j < n; ++j) {
        if (model.lower[j] && outcome.ray(j) < 0) issues.push_back("ray leaves lower bound");
        if (model.upper[j] && outcome.ray(j) > 0) issues.push_back("ray leaves upper bound");
      }
      if (dot(model.objective, outcome.ray) >= 0) issues.push_back("ray is not improving");
      break;
    }
  }
  return issues;
}

namespace detail {

template <typename Scalar>
class TableauSolver {
 public:
  explicit TableauSolver(const LpModel<Scalar>& model) : model_(model) {}

  LpOutcome<Scalar> run() {
    LpOutcome<Scalar> out;
    if (auto crossed = crossed_bounds()) {
      out.status = LpStatus::Infeasible;
      out.farkas = *crossed;
      return out;
    }
    build();
    // Phase 1: minimize the sum of artificials.
    VectorX<Scalar> phase1_cost = VectorX<Scalar>::Zero(num_cols_);
    for (Index c = first_artificial_; c < num_cols_; ++c) phase1_cost(c) = 1;
    price(phase1_cost);
    iterate(/*unbounded_col=*/nullptr);
    if (-obj_(num_cols_) > 0) {
      out.status = LpStatus::Infeasible;
      out.farkas = multipliers(phase1_cost, VectorX<Scalar>::Zero(n_));
      out.pivots = pivots_;
      return out;
    }
    drive_out_artificials();

    VectorX<Scalar> phase2_cost = VectorX<Scalar>::Zero(num_cols_);
    for (Index c = 0; c < num_structural_; ++c)
      phase2_cost(c) = model_.objective(col_var_[c]) * Scalar(col_sign_[c]);
    price(phase2_cost);
    Index entering = -1;
    iterate(&entering);

    out.x = point();
    out.objective = dot(model_.objective, out.x);
    out.pivots = pivots_;
    if (entering >= 0) {
      out.status = LpStatus::Unbounded;
      VectorX<Scalar> dz = VectorX<Scalar>::Zero(num_cols_);
      dz(entering) = 1;
      for (Index r = 0; r < num_rows_; ++r) dz(basis_[r]) = -T_(r, entering);
      out.ray = VectorX<Scalar>::Zero(n_);
      for (Index c = 0; c < num_structural_; ++c)
        if (dz(c) != 0) out.ray(col_var_[c]) += dz(c) * Scalar(col_sign_[c]);
      return out;
    }
    out.status = LpStatus::Optimal;
    out.duals = multipliers(phase2_cost, model_.objective);
    return out;
  }

 private:
  enum class Kind { Fixed, Lower, Upper, Both, Free };

  std::optional<Multipliers<Scalar>> crossed_bounds() const {
    for (Index j = 0; j < model_.num_vars(); ++j) {
      const auto& lo = bound(model_.lower, j);
      const auto& up = bound(model_.upper, j);
      if (lo && up && *lo > *up) {
        Multipliers<Scalar> m{VectorX<Scalar>::Zero(model_.num_rows()),
                              VectorX<Scalar>::Zero(model_.num_vars()),
                              VectorX<Scalar>::Zero(model_.num_vars())};
        m.lower(j) = 1;
        m.upper(j) = 1;
        return m;
      }
    }
    return std::nullopt;
  }

  static const std::optional<Scalar>& bound(const std::vector<std::optional<Scalar>>& b, Index j) {
    static const std::optional<Scalar> none;
    return j < static_cast<Index>(b.size()) ? b[j] : none;
  }

  void build() {
    n_ = model_.num_vars();
    kind_.resize(n_);
    offset_ = VectorX<Scalar>::Zero(n_);
    for (Index j = 0; j < n_; ++j) {
      const auto& lo = bound(model_.lower, j);
      const auto& up = bound(model_.upper, j);
      if (lo && up && *lo == *up) {
        kind_[j] = Kind::Fixed;
        offset_(j) = *lo;
      } else if (lo && up) {
        kind_[j] = Kind::Both;
        offset_(j) = *lo;
      } else if (lo) {
        kind_[j] = Kind::Lower;
        offset_(j) = *lo;
      } else if (up) {
        kind_[j] = Kind::Upper;
        offset_(j) = *up;
      } else {
        kind_[j] = Kind::Free;
      }
      switch (kind_[j]) {
        case Kind::Fixed: break;
        case Kind::Lower:
        case Kind::Both: add_col(j, 1); break;
        case Kind::Upper: add_col(j, -1); break;
        case Kind::Free:
          add_col(j, 1);
          add_col(j, -1);
          break;
      }
    }
    num_structural_ = static_cast<Index>(col_var_.size());

    // Internal rows: model rows, then one "x' <= u - l" row per doubly
    // bounded variable.
    const Index m = model_.num_rows();
    std::vector<Index> upper_vars;
    for (Index j = 0; j < n_; ++j)
      if (kind_[j] == Kind::Both) upper_vars.push_back(j);
    num_rows_ = m + static_cast<Index>(upper_vars.size());
    upper_row_var_ = upper_vars;

    RowMatrixX<Scalar> rows = RowMatrixX<Scalar>::Zero(num_rows_, num_structural_);
    VectorX<Scalar> rhs(num_rows_);
    senses_.assign(num_rows_, Sense::LessEqual);
    for (Index i = 0; i < m; ++i) {
      Scalar shift(0);
      for (Index j = 0; j < n_; ++j)
        if (model_.A(i, j) != 0 && offset_(j) != 0) shift += model_.A(i, j) * offset_(j);
      rhs(i) = model_.rhs(i) - shift;
      senses_[i] = model_.sense[i];
    }
    for (Index c = 0; c < num_structural_; ++c)
      for (Index i = 0; i < m; ++i)
        if (model_.A(i, col_var_[c]) != 0) rows(i, c) = model_.A(i, col_var_[c]) * Scalar(col_sign_[c]);
    for (std::size_t u = 0; u < upper_vars.size(); ++u) {
      const Index r = m + static_cast<Index>(u);
      const Index j = upper_vars[u];
      rows(r, var_first_col_[j]) = 1;
      rhs(r) = *model_.upper[j] - *model_.lower[j];
    }

    // Slack per inequality row; flip rows to a nonnegative right-hand side;
    // artificial where the slack cannot start in the basis.
    flip_.assign(num_rows_, 1);
    unit_col_.assign(num_rows_, -1);
    std::vector<int> slack_coeff(num_rows_, 0);
    Index num_slacks = 0;
    for (Index r = 0; r < num_rows_; ++r) {
      if (senses_[r] != Sense::Equal) ++num_slacks;
      if (rhs(r) < 0) flip_[r] = -1;
      slack_coeff[r] = senses_[r] == Sense::GreaterEqual ? -1 : senses_[r] == Sense::LessEqual ? 1 : 0;
    }
    first_artificial_ = num_structural_ + num_slacks;
    Index num_artificial = 0;
    for (Index r = 0; r < num_rows_; ++r)
      if (slack_coeff[r] * flip_[r] != 1) ++num_artificial;
    num_cols_ = first_artificial_ + num_artificial;

    T_ = RowMatrixX<Scalar>::Zero(num_rows_, num_cols_ + 1);
    basis_.assign(num_rows_, -1);
    Index next_slack = num_structural_;
    Index next_art = first_artificial_;
    for (Index r = 0; r < num_rows_; ++r) {
      const Scalar f(flip_[r]);
      for (Index c = 0; c < num_structural_; ++c)
        if (rows(r, c) != 0) T_(r, c) = flip_[r] > 0 ? rows(r, c) : Scalar(-rows(r, c));
      T_(r, num_cols_) = flip_[r] > 0 ? rhs(r) : Scalar(-rhs(r));
      if (slack_coeff[r] != 0) {
        const Index s = next_slack++;
        T_(r, s) = Scalar(slack_coeff[r]) * f;
        if (slack_coeff[r] * flip_[r] == 1) {
          basis_[r] = s;
          unit_col_[r] = s;
        }
      }
      if (basis_[r] < 0) {
        const Index a = next_art++;
        T_(r, a) = 1;
        basis_[r] = a;
        unit_col_[r] = a;
      }
    }
  }

  void add_col(Index var, int sign) {
    if (sign > 0 || kind_[var] != Kind::Free) var_first_col_[var] = static_cast<Index>(col_var_.size());
    col_var_.push_back(var);
    col_sign_.push_back(sign);
  }

  void price(const VectorX<Scalar>& cost) {
    cost_ = cost;
    obj_ = VectorX<Scalar>::Zero(num_cols_ + 1);
    for (Index c = 0; c < num_cols_; ++c) obj_(c) = cost(c);
    for (Index r = 0; r < num_rows_; ++r) {
      const Scalar& cb = cost(basis_[r]);
      if (cb == 0) continue;
      for (Index c = 0; c <= num_cols_; ++c)
        if (T_(r, c) != 0) obj_(c) -= cb * T_(r, c);
    }
  }

  // Bland's rule over non-artificial columns. Leaves `*unbounded_col` at the
  // entering column when no row limits it.
  void iterate(Index* unbounded_col) {
    for (;;) {
      Index q = -1;
      for (Index c = 0; c < first_artificial_; ++c)
        if (obj_(c) < 0) {
          q = c;
          break;
        }
      if (q < 0) return;
      Index r = -1;
      Scalar best;
      for (Index i = 0; i < num_rows_; ++i) {
        if (T_(i, q) <= 0) continue;
        Scalar ratio = T_(i, num_cols_) / T_(i, q);
        if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r < 0) {
        if (unbounded_col) *unbounded_col = q;
        return;
      }
      pivot(r, q);
    }
  }

  void pivot(Index r, Index q) {
    ++pivots_;
    const Scalar p = T_(r, q);
    std::vector<Index> support;
    for (Index c = 0; c <= num_cols_; ++c) {
      if (T_(r, c) == 0) continue;
      if (p != 1) T_(r, c) /= p;
      support.push_back(c);
    }
    for (Index i = 0; i < num_rows_; ++i) {
      if (i == r || T_(i, q) == 0) continue;
      const Scalar factor = T_(i, q);
      for (Index c : support) T_(i, c) -= factor * T_(r, c);
    }
    if (obj_(q) != 0) {
      const Scalar factor = obj_(q);
      for (Index c : support) obj_(c) -= factor * T_(r, c);
    }
    basis_[r] = q;
  }

  void drive_out_artificials() {
    for (Index r = 0; r < num_rows_; ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (Index c = 0; c < first_artificial_; ++c)
        if (T_(r, c) != 0) {
          pivot(r, c);
          break;
        }
      // A row with no non-artificial entry is redundant; its artificial
      // stays basic at zero and is never touched again.
    }
  }

  VectorX<Scalar> point() const {
    VectorX<Scalar> z = VectorX<Scalar>::Zero(num_cols_);
    for (Index r = 0; r < num_rows_; ++r) z(basis_[r]) = T_(r, num_cols_);
    VectorX<Scalar> x = offset_;
    for (Index c = 0; c < num_structural_; ++c)
      if (z(c) != 0) x(col_var_[c]) += z(c) * Scalar(col_sign_[c]);
    return x;
  }

  // Row multipliers read off the reduced costs of the unit columns, then
  // bound multipliers from the residual cost - A^T y.
  Multipliers<Scalar> multipliers(const VectorX<Scalar>& internal_cost,
                                  const VectorX<Scalar>& cost) const {
    const Index m = model_.num_rows();
    VectorX<Scalar> v(num_rows_);
    for (Index r = 0; r < num_rows_; ++r) {
      const Index u = unit_col_[r];
      Scalar w = internal_cost(u) - obj_(u);
      v(r) = flip_[r] > 0 ? w : Scalar(-w);
    }
    Multipliers<Scalar> out{v.head(m), VectorX<Scalar>::Zero(n_), VectorX<Scalar>::Zero(n_)};
    VectorX<Scalar> residual = cost - transpose_times(model_.A, out.rows);
    for (Index j = 0; j < n_; ++j) {
      switch (kind_[j]) {
        case Kind::Free: break;
        case Kind::Lower: out.lower(j) = residual(j); break;
        case Kind::Upper: out.upper(j) = -residual(j); break;
        case Kind::Fixed:
          if (residual(j) > 0) out.lower(j) = residual(j);
          else out.upper(j) = -residual(j);
          break;
        case Kind::Both: break;
      }
    }
    for (std::size_t u = 0; u < upper_row_var_.size(); ++u) {
      const Index j = upper_row_var_[u];
      out.upper(j) = -v(m + static_cast<Index>(u));
      out.lower(j) = residual(j) + out.upper(j);
    }
    return out;
  }

  const LpModel<Scalar>& model_;
  Index n_ = 0;
  std::vector<Kind> kind_;
  VectorX<Scalar> offset_;
  std::vector<Index> col_var_;
  std::vector<int> col_sign_;
  std::vector<Index> upper_row_var_;
  std::vector<Index> var_first_col_ = std::vector<Index>(model_.num_vars(), -1);
  std::vector<Sense> senses_;
  std::vector<int> flip_;
  std::vector<Index> unit_col_;
  std::vector<Index> basis_;
  Index num_structural_ = 0;
  Index num_rows_ = 0;
  Index first_artificial_ = 0;
  Index num_cols_ = 0;
  RowMatrixX<Scalar> T_;
  VectorX<Scalar> obj_;
  VectorX<Scalar> cost_;
  std::int64_t pivots_ = 0;
};

}  // namespace detail

/// Solves `model` exactly. The returned certificate has already been
/// verified; a failed verification throws CertificationError.
template <typename Scalar>
LpOutcome<Scalar> solve_lp(const LpModel<Scalar>& model) {
  if (static_cast<Index>(model.sense.size()) != model.num_rows() ||
      model.rhs.size() != model.num_rows() || model.A.cols() != model.num_vars())
    throw ValidationError("LP model has inconsistent dimensions");
  LpModel<Scalar> padded;
  const LpModel<Scalar>* use = &model;
  if (static_cast<Index>(model.lower.size()) != model.num_vars() ||
      static_cast<Index>(model.upper.size()) != model.num_vars()) {
    padded = model;
    padded.lower.resize(model.num_vars());
    padded.upper.resize(model.num_vars());
    use = &padded;
  }
  LpOutcome<Scalar> out = detail::TableauSolver<Scalar>(*use).run();
  const auto issues = verify_outcome(*use, out);
  if (!issues.empty())
    throw CertificationError("LP certificate failed: " + issues.front());
  auto& audit = lp_audit();
  switch (out.status) {
    case LpStatus::Optimal: ++audit.optimal; break;
    case LpStatus::Infeasible: ++audit.infeasible; break;
    case LpStatus::Unbounded: ++audit.unbounded; break;
  }
  return out;
}

}  // namespace blvl
