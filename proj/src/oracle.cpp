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

#include "blvl/oracle.hpp"

#include "blvl/errors.hpp"
#include "blvl/lower_level.hpp"

#include <algorithm>
#include <sstream>

namespace blvl {
namespace {

void check_rows(FeasibilityReport& report, const char* block, const MatQ& Mx, const MatQ& My, const VecQ& rhs,
                const VecQ& x, const VecQ& y) {
  const VecQ act = times(Mx, x) + times(My, y);
  for (Index i = 0; i < rhs.size(); ++i)
    if (act(i) < rhs(i))
      report.violations.push_back(Violation{std::string(block) + " row " + std::to_string(i), rhs(i) - act(i)});
}

std::string join(const VecQ& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ";";
    out += to_string(v(i));
  }
  return out;
}

}  // namespace

Polyhedron<Rat> combined_polyhedron(const BilevelInstance& inst) {
  const Index n = inst.n;
  const Index m = inst.m;
  const Index rows = inst.p() + inst.k() + inst.l();
  Polyhedron<Rat> poly{MatQ::Zero(rows, n + m), VecQ::Zero(rows), 0};
  Index r = 0;
  for (Index i = 0; i < inst.p(); ++i, ++r) {
    poly.A.row(r).head(n) = inst.G.row(i);
    poly.b(r) = inst.g(i);
  }
  for (Index i = 0; i < inst.k(); ++i, ++r) {
    poly.A.row(r).head(n) = inst.A.row(i);
    poly.A.row(r).tail(m) = inst.B.row(i);
    poly.b(r) = inst.a(i);
  }
  for (Index i = 0; i < inst.l(); ++i, ++r) {
    poly.A.row(r).head(n) = inst.C.row(i);
    poly.A.row(r).tail(m) = inst.D.row(i);
    poly.b(r) = inst.b(i);
  }
  return poly;
}

std::vector<std::pair<VecQ, VecQ>> bilevel_feasible_vertices(const BilevelInstance& inst) {
  if (const auto issues = validate(inst); !issues.empty()) throw ValidationError(issues.front());
  const VertexList<Rat> list = enumerate_vertices(combined_polyhedron(inst));
  std::vector<std::pair<VecQ, VecQ>> kept;
  for (const VecQ& v : list.vertices) {
    VecQ x = v.head(inst.n);
    VecQ y = v.tail(inst.m);
    const LpOutcome<Rat> ll = lower_level_solve(inst, x);
    if (ll.status == LpStatus::Optimal && dot(inst.f, y) == ll.objective) kept.emplace_back(std::move(x), std::move(y));
  }
  return kept;
}

namespace {

// Some fixed follower dual mu >= 0, D^T mu = f, supported on rows that are
// tight at (x, y) and stay tight along r, proves y + t r_y optimal at
// x + t r_x for every t >= 0.
bool duals_hold_along(const BilevelInstance& inst, const VecQ& x, const VecQ& y, const VecQ& r) {
  const VecQ slack = times(inst.C, x) + times(inst.D, y) - inst.b;
  const VecQ drift = times(inst.C, r.head(inst.n).eval()) + times(inst.D, r.tail(inst.m).eval());
  LpModel<Rat> lp(inst.l());
  for (Index j = 0; j < inst.m; ++j) lp.add_row(inst.D.col(j), Sense::Equal, inst.f(j));
  for (Index i = 0; i < inst.l(); ++i) {
    lp.lower[i] = Rat(0);
    if (slack(i) != 0 || drift(i) != 0) lp.upper[i] = Rat(0);
  }
  return solve_lp(lp).status == LpStatus::Optimal;
}

}  // namespace

std::optional<std::string> unbounded_ray_certificate(const BilevelInstance& inst) {
  if (const auto issues = validate(inst); !issues.empty()) throw ValidationError(issues.front());
  const Polyhedron<Rat> poly = combined_polyhedron(inst);
  const Index dim = poly.dim();
  if (dim == 0 || exact_rank(poly.A) < dim) return std::nullopt;
  // Extreme rays are the vertices of the normalized recession cone.
  Polyhedron<Rat> cone{MatQ::Zero(poly.num_rows() + 1, dim), VecQ::Zero(poly.num_rows() + 1), 1};
  cone.A.row(0) = poly.A.colwise().sum();
  cone.b(0) = 1;
  cone.A.bottomRows(poly.num_rows()) = poly.A;
  const VertexList<Rat> rays = enumerate_vertices(cone);
  if (rays.vertices.empty()) return std::nullopt;
  VecQ cost(dim);
  cost << inst.c, inst.d;
  for (const VecQ& v : enumerate_vertices(poly, /*require_bounded=*/false).vertices) {
    const VecQ x = v.head(inst.n), y = v.tail(inst.m);
    const LpOutcome<Rat> ll = lower_level_solve(inst, x);
    if (ll.status != LpStatus::Optimal || dot(inst.f, y) != ll.objective) continue;
    for (const VecQ& r : rays.vertices) {
      if (dot(cost, r) >= 0 || !duals_hold_along(inst, x, y, r)) continue;
      return "bilevel-feasible ray from (" + join(x) + " | " + join(y) + ") along (" + join(r.head(inst.n)) + " | " +
             join(r.tail(inst.m)) + ")";
    }
  }
  return std::nullopt;
}

BilevelSolution solve_bilevel_bruteforce(const BilevelInstance& inst) {
  std::vector<std::pair<VecQ, VecQ>> kept;
  try {
    kept = bilevel_feasible_vertices(inst);
  } catch (const UnboundedPolyhedronError&) {
    if (const auto ray = unbounded_ray_certificate(inst)) throw UnboundedError("objective unbounded: " + *ray);
    throw;
  }
  if (kept.empty()) throw InfeasibleError("no bilevel-feasible vertex: the instance is infeasible");
  std::size_t best = 0;
  Rat best_value = inst.leader_objective(kept[0].first, kept[0].second);
  for (std::size_t i = 1; i < kept.size(); ++i) {
    Rat value = inst.leader_objective(kept[i].first, kept[i].second);
    if (value < best_value) {
      best = i;
      best_value = std::move(value);
    }
  }
  BilevelSolution sol;
  sol.x = kept[best].first;
  sol.y = kept[best].second;
  sol.objective = best_value;
  sol.method = Method::Oracle;
  sol.certificate = check_bilevel_feasible(inst, sol.x, sol.y);
  if (!sol.certificate.feasible()) throw CertificationError("oracle optimum failed its own check");
  return sol;
}

FeasibilityReport check_bilevel_feasible(const BilevelInstance& inst, const VecQ& x, const VecQ& y) {
  FeasibilityReport report;
  if (x.size() != inst.n || y.size() != inst.m) {
    report.violations.push_back(Violation{"point dimension", Rat(0)});
    return report;
  }
  check_rows(report, "X", inst.G, MatQ::Zero(inst.p(), inst.m), inst.g, x, y);
  check_rows(report, "coupling", inst.A, inst.B, inst.a, x, y);
  check_rows(report, "lower", inst.C, inst.D, inst.b, x, y);
  const LpOutcome<Rat> ll = lower_level_solve(inst, x);
  switch (ll.status) {
    case LpStatus::Optimal: {
      const Rat gap = dot(inst.f, y) - ll.objective;
      if (gap != 0) report.violations.push_back(Violation{"follower optimality", gap});
      break;
    }
    case LpStatus::Infeasible:
      report.violations.push_back(Violation{"follower optimality: lower level infeasible", Rat(0)});
      break;
    case LpStatus::Unbounded:
      report.violations.push_back(Violation{"follower optimality: lower level unbounded", Rat(0)});
      break;
  }
  return report;
}

FeasibilityReport check_lifted_feasible(const LiftedInstance& lifted, const LiftedPoint& point) {
  const BilevelInstance& inst = lifted.base;
  FeasibilityReport report;
  if (point.x.size() != inst.n || point.y.size() != inst.m) {
    report.violations.push_back(Violation{"point dimension", Rat(0)});
    return report;
  }
  VecQ follower(inst.m + 1);
  follower << point.y, point.epsilon;
  check_rows(report, "X", inst.G, MatQ::Zero(inst.p(), inst.m + 1), inst.g, point.x, follower);
  if (point.epsilon != 0) report.violations.push_back(Violation{"coupling eps = 0", point.epsilon});
  check_rows(report, "lifted lower", lifted.lower_C(), lifted.lower_D(), lifted.lower_b(), point.x, follower);
  const LpOutcome<Rat> ll = lifted_lower_level_solve(lifted, point.x);
  if (ll.status != LpStatus::Optimal) {
    report.violations.push_back(Violation{"follower optimality: lifted lower level not solvable", Rat(0)});
  } else if (const Rat gap = dot(inst.f, point.y) - ll.objective; gap != 0) {
    report.violations.push_back(Violation{"follower optimality", gap});
  }
  return report;
}

LiftedPoint lift_point(const BilevelInstance& inst, const VecQ& x, const VecQ& y) {
  if (x.size() != inst.n || y.size() != inst.m) throw ValidationError("point has wrong dimension");
  FeasibilityReport lower;
  check_rows(lower, "lower", inst.C, inst.D, inst.b, x, y);
  if (!lower.feasible()) throw ValidationError("y is infeasible for the lower level at x: " + lower.violations[0].condition);
  LiftedPoint out{x, y, Rat(0)};
  const VecQ residual = inst.a - times(inst.A, x) - times(inst.B, y);
  for (Index i = 0; i < residual.size(); ++i)
    if (residual(i) > out.epsilon) out.epsilon = residual(i);
  return out;
}

SampleRecord sample_point(const BilevelInstance& inst, const VecQ& x) {
  SampleRecord rec;
  rec.x = x;
  const LpOutcome<Rat> ll = lower_level_solve(inst, x);
  rec.status = ll.status;
  if (ll.status != LpStatus::Optimal) return rec;

  // Optimistic reply: minimize d.y over the follower's optimal face,
  // first restricted to the coupling rows.
  LpModel<Rat> face = lower_level_model(inst, x);
  face.objective = inst.d;
  face.add_row(inst.f, Sense::Equal, ll.objective);
  LpModel<Rat> coupled = face;
  const VecQ coupling_rhs = inst.a - times(inst.A, x);
  for (Index i = 0; i < inst.k(); ++i) coupled.add_row(inst.B.row(i).transpose(), Sense::GreaterEqual, coupling_rhs(i));

  const LpOutcome<Rat> best = solve_lp(coupled);
  if (best.status != LpStatus::Infeasible) {
    rec.y = best.x;
    rec.coupling_ok = true;
  } else {
    const LpOutcome<Rat> fallback = solve_lp(face);
    rec.y = fallback.status == LpStatus::Infeasible ? ll.x : fallback.x;
  }
  rec.objective = inst.leader_objective(x, *rec.y);
  return rec;
}

std::vector<Interval> induced_intervals(const BilevelInstance& inst, const Rat& from, const Rat& to) {
  if (inst.n != 1) throw ValidationError("interval detection needs exactly one leader variable");
  if (from > to) throw ValidationError("empty range: from > to");
  const Index m = inst.m;
  const Index l = inst.l();

  // Follower value function phi(x) = max over dual vertices mu of
  // (b - C x)^T mu on {mu >= 0 : D^T mu = f}.
  Polyhedron<Rat> dual{MatQ::Zero(m + l, l), VecQ::Zero(m + l), m};
  if (m > 0) {
    dual.A.topRows(m) = inst.D.transpose();
    dual.b.head(m) = inst.f;
  }
  for (Index j = 0; j < l; ++j) dual.A(m + j, j) = 1;
  const VertexList<Rat> duals = enumerate_vertices(dual, /*require_bounded=*/false);
  if (duals.vertices.empty()) return {};

  std::vector<Rat> alpha, beta;  // phi(x) = max_v alpha_v - beta_v x
  for (const VecQ& mu : duals.vertices) {
    alpha.push_back(dot(inst.b, mu));
    beta.push_back(dot(inst.C.col(0), mu));
  }

  std::vector<Rat> cuts{from, to};
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      if (beta[i] == beta[j]) continue;
      Rat x = (alpha[i] - alpha[j]) / (beta[i] - beta[j]);
      if (x > from && x < to) cuts.push_back(std::move(x));
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.size() == 1) cuts.push_back(cuts[0]);

  std::vector<Interval> pieces;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const Rat& lo = cuts[s];
    const Rat& hi = cuts[s + 1];
    const Rat mid = (lo + hi) / 2;
    std::size_t line = 0;
    for (std::size_t v = 1; v < alpha.size(); ++v)
      if (alpha[v] - beta[v] * mid > alpha[line] - beta[line] * mid) line = v;

    // On this piece phi is affine, so bilevel feasibility is the polyhedron
    // below and its x-projection is an interval.
    LpModel<Rat> lp(1 + m);
    VecQ row = VecQ::Zero(1 + m);
    row(0) = 1;
    lp.add_row(row, Sense::GreaterEqual, lo);
    lp.add_row(row, Sense::LessEqual, hi);
    for (Index i = 0; i < inst.p(); ++i) {
      row.setZero();
      row(0) = inst.G(i, 0);
      lp.add_row(row, Sense::GreaterEqual, inst.g(i));
    }
    for (Index i = 0; i < inst.k(); ++i) {
      row(0) = inst.A(i, 0);
      row.tail(m) = inst.B.row(i).transpose();
      lp.add_row(row, Sense::GreaterEqual, inst.a(i));
    }
    for (Index i = 0; i < l; ++i) {
      row(0) = inst.C(i, 0);
      row.tail(m) = inst.D.row(i).transpose();
      lp.add_row(row, Sense::GreaterEqual, inst.b(i));
    }
    row(0) = beta[line];
    row.tail(m) = inst.f;
    lp.add_row(row, Sense::LessEqual, alpha[line]);

    lp.objective.setZero();
    lp.objective(0) = 1;
    const LpOutcome<Rat> left = solve_lp(lp);
    if (left.status != LpStatus::Optimal) continue;
    lp.objective(0) = -1;
    const LpOutcome<Rat> right = solve_lp(lp);
    pieces.push_back(Interval{left.x(0), right.x(0)});
  }

  std::vector<Interval> merged;
  for (const Interval& piece : pieces) {
    if (!merged.empty() && piece.lo <= merged.back().hi) {
      if (piece.hi > merged.back().hi) merged.back().hi = piece.hi;
    } else {
      merged.push_back(piece);
    }
  }
  return merged;
}

SampleReport sample_induced_set(const BilevelInstance& inst, Index axis, const Rat& from, const Rat& to,
                                const Rat& step) {
  if (const auto issues = validate(inst); !issues.empty()) throw ValidationError(issues.front());
  if (axis < 0 || axis >= inst.n) throw ValidationError("axis out of range");
  if (step <= 0) throw ValidationError("step must be positive");
  if (from > to) throw ValidationError("empty range: from > to");

  SampleReport report;
  for (Rat t = from; t <= to; t += step) {
    VecQ x = VecQ::Zero(inst.n);
    x(axis) = t;
    report.records.push_back(sample_point(inst, x));
  }
  if (inst.n != 1) return report;

  report.has_intervals = true;
  report.intervals = induced_intervals(inst, from, to);
  for (const SampleRecord& rec : report.records) {
    FeasibilityReport in_x;
    check_rows(in_x, "X", inst.G, MatQ::Zero(inst.p(), 0), inst.g, rec.x, VecQ(0));
    const bool grid_feasible = rec.status == LpStatus::Optimal && rec.coupling_ok && in_x.feasible();
    const bool covered = std::any_of(report.intervals.begin(), report.intervals.end(),
                                     [&](const Interval& iv) { return iv.lo <= rec.x(0) && rec.x(0) <= iv.hi; });
    if (grid_feasible != covered)
      throw CertificationError("grid point " + to_string(rec.x(0)) + " disagrees with the exact intervals");
  }
  return report;
}

std::string format_samples(const SampleReport& report) {
  std::ostringstream os;
  os << "# x, status, y, coupling_ok, objective\n";
  for (const SampleRecord& rec : report.records) {
    os << join(rec.x) << ", " << to_string(rec.status) << ", " << (rec.y ? join(*rec.y) : "") << ", "
       << (rec.coupling_ok ? "true" : "false") << ", " << (rec.objective ? to_string(*rec.objective) : "") << "\n";
  }
  for (const Interval& iv : report.intervals) os << "# interval " << to_string(iv.lo) << " " << to_string(iv.hi) << "\n";
  return os.str();
}

}  // namespace blvl
