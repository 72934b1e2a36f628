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

#include "blvl/transform.hpp"

#include "blvl/errors.hpp"
#include "json_util.hpp"

#include <sstream>

namespace blvl {

using json_util::ordered_json;

LiftedInstance lift_coupling(const BilevelInstance& inst) {
  if (const auto issues = validate(inst); !issues.empty()) throw ValidationError(issues.front());
  return LiftedInstance{inst, inst.m};
}

BilevelPoint project_solution(const LiftedPoint& point) { return BilevelPoint{point.x, point.y}; }

ComplementaritySystem kkt_reformulate(const LiftedInstance& lifted) {
  const BilevelInstance& inst = lifted.base;
  ComplementaritySystem sys;
  KktLayout& L = sys.layout;
  L.n = inst.n;
  L.m = inst.m;
  L.k = inst.k();
  L.l = inst.l();
  L.x = 0;
  L.y = L.n;
  L.eps = L.n + L.m;
  L.lambda = L.eps + 1;
  L.mu = L.lambda + L.k;
  L.eta = L.mu + L.l;
  L.num_continuous = L.eta + 1;
  const Index N = L.num_continuous;

  for (Index i = 0; i < L.n; ++i) sys.variables.push_back({"x_" + std::to_string(i), VarType::Continuous, {}, {}});
  for (Index j = 0; j < L.m; ++j) sys.variables.push_back({"y_" + std::to_string(j), VarType::Continuous, {}, {}});
  sys.variables.push_back({"eps", VarType::Continuous, {}, {}});
  for (Index i = 0; i < L.k; ++i)
    sys.variables.push_back({"lambda_" + std::to_string(i), VarType::Continuous, Rat(0), {}});
  for (Index j = 0; j < L.l; ++j) sys.variables.push_back({"mu_" + std::to_string(j), VarType::Continuous, Rat(0), {}});
  sys.variables.push_back({"eta", VarType::Continuous, Rat(0), {}});

  auto blank = [N] { return VecQ::Zero(N).eval(); };

  for (Index i = 0; i < inst.p(); ++i) {
    VecQ row = blank();
    row.segment(L.x, L.n) = inst.G.row(i).transpose();
    sys.rows.push_back({"X_" + std::to_string(i), row, Sense::GreaterEqual, inst.g(i)});
  }
  {
    VecQ row = blank();
    row(L.eps) = 1;
    sys.epsilon_zero_row = static_cast<Index>(sys.rows.size());
    sys.rows.push_back({"eps_zero", row, Sense::Equal, Rat(0)});
  }
  std::vector<VecQ> coupling_expr, lower_expr;
  for (Index i = 0; i < L.k; ++i) {
    VecQ row = blank();
    row.segment(L.x, L.n) = inst.A.row(i).transpose();
    row.segment(L.y, L.m) = inst.B.row(i).transpose();
    row(L.eps) = 1;
    coupling_expr.push_back(row);
    sys.rows.push_back({"coupling_" + std::to_string(i), row, Sense::GreaterEqual, inst.a(i)});
  }
  for (Index j = 0; j < L.l; ++j) {
    VecQ row = blank();
    row.segment(L.x, L.n) = inst.C.row(j).transpose();
    row.segment(L.y, L.m) = inst.D.row(j).transpose();
    lower_expr.push_back(row);
    sys.rows.push_back({"lower_" + std::to_string(j), row, Sense::GreaterEqual, inst.b(j)});
  }
  VecQ eps_row = blank();
  eps_row(L.eps) = 1;
  sys.rows.push_back({"eps_nonneg", eps_row, Sense::GreaterEqual, Rat(0)});

  for (Index j = 0; j < L.m; ++j) {
    VecQ row = blank();
    for (Index i = 0; i < L.k; ++i) row(L.lambda + i) = inst.B(i, j);
    for (Index r = 0; r < L.l; ++r) row(L.mu + r) = inst.D(r, j);
    sys.rows.push_back({"stationarity_y_" + std::to_string(j), row, Sense::Equal, inst.f(j)});
  }
  {
    VecQ row = blank();
    for (Index i = 0; i < L.k; ++i) row(L.lambda + i) = 1;
    row(L.eta) = 1;
    sys.rows.push_back({"stationarity_eps", row, Sense::Equal, Rat(0)});
  }

  for (Index i = 0; i < L.k; ++i)
    sys.pairs.push_back({"lambda_" + std::to_string(i), L.lambda + i, coupling_expr[i], inst.a(i)});
  for (Index j = 0; j < L.l; ++j) sys.pairs.push_back({"mu_" + std::to_string(j), L.mu + j, lower_expr[j], inst.b(j)});
  sys.pairs.push_back({"eta", L.eta, eps_row, Rat(0)});

  sys.objective = blank();
  sys.objective.segment(L.x, L.n) = inst.c;
  sys.objective.segment(L.y, L.m) = inst.d;
  return sys;
}

std::vector<std::string> ComplementaritySystem::check(const VecQ& point) const {
  MilpModel model;
  model.variables = variables;
  model.rows = rows;
  model.objective = objective;
  std::vector<std::string> out = model.check(point);
  if (point.size() != layout.num_continuous) return out;
  for (const auto& pair : pairs) {
    const Rat slack = dot(pair.expression, point) - pair.constant;
    if (point(pair.variable) != 0 && slack != 0) out.push_back("complementarity " + pair.name);
  }
  return out;
}

namespace {

// max |h . v - h0| over the polytope, or nullopt when it is empty.
std::optional<Rat> max_abs(const LpModel<Rat>& region, const VecQ& h, const Rat& h0) {
  LpModel<Rat> lp = region;
  Rat best(0);
  for (int sign : {1, -1}) {
    lp.objective = h * Rat(sign);
    const LpOutcome<Rat> out = solve_lp(lp);
    if (out.status == LpStatus::Infeasible) return std::nullopt;
    if (out.status == LpStatus::Unbounded) throw UnboundedPolyhedronError("primal region of the lifted problem is unbounded");
    const Rat value = abs(dot(h, out.x) - h0);
    if (value > best) best = value;
  }
  return best;
}

}  // namespace

Rat dual_vertex_bound(const LiftedInstance& lifted) {
  const BilevelInstance& inst = lifted.base;
  const Index k = inst.k();
  const Index l = inst.l();
  const Index m = inst.m;
  const Index dim = k + l + 1;
  Polyhedron<Rat> dual{MatQ::Zero(m + 1 + dim, dim), VecQ::Zero(m + 1 + dim), m + 1};
  if (m > 0) {
    if (k > 0) dual.A.block(0, 0, m, k) = inst.B.transpose();
    if (l > 0) dual.A.block(0, k, m, l) = inst.D.transpose();
    dual.b.head(m) = inst.f;
  }
  for (Index i = 0; i < k; ++i) dual.A(m, i) = 1;
  dual.A(m, dim - 1) = 1;
  for (Index j = 0; j < dim; ++j) dual.A(m + 1 + j, j) = 1;
  const VertexList<Rat> vertices = enumerate_vertices(dual, /*require_bounded=*/false);
  Rat best(0);
  for (const VecQ& v : vertices.vertices)
    for (Index j = 0; j < v.size(); ++j)
      if (abs(v(j)) > best) best = abs(v(j));
  return best;
}

BigMBounds big_m_bounds(const LiftedInstance& lifted) {
  const BilevelInstance& inst = lifted.base;
  const Index n = inst.n;
  const Index m = inst.m;
  BigMBounds out;

  // Lower-level region over (x, y): X rows and follower rows.
  LpModel<Rat> region(n + m);
  VecQ row(n + m);
  for (Index i = 0; i < inst.p(); ++i) {
    row.setZero();
    row.head(n) = inst.G.row(i).transpose();
    region.add_row(row, Sense::GreaterEqual, inst.g(i));
  }
  for (Index j = 0; j < inst.l(); ++j) {
    row.head(n) = inst.C.row(j).transpose();
    row.tail(m) = inst.D.row(j).transpose();
    region.add_row(row, Sense::GreaterEqual, inst.b(j));
  }
  Rat violation(0);
  for (Index i = 0; i < inst.k(); ++i) {
    region.objective.head(n) = inst.A.row(i).transpose();
    region.objective.tail(m) = inst.B.row(i).transpose();
    const LpOutcome<Rat> lp = solve_lp(region);
    if (lp.status == LpStatus::Unbounded) throw UnboundedPolyhedronError("lower-level region is unbounded");
    if (lp.status == LpStatus::Infeasible) break;
    const Rat v = inst.a(i) - lp.objective;
    if (v > violation) violation = v;
  }
  out.epsilon_cap = violation + 1;

  // Truncated primal polytope over (x, y, eps).
  const Index dim = n + m + 1;
  LpModel<Rat> primal(dim);
  std::vector<std::pair<VecQ, Rat>> slacks;
  VecQ prow(dim);
  for (Index i = 0; i < inst.p(); ++i) {
    prow.setZero();
    prow.head(n) = inst.G.row(i).transpose();
    primal.add_row(prow, Sense::GreaterEqual, inst.g(i));
  }
  for (Index i = 0; i < inst.k(); ++i) {
    prow.head(n) = inst.A.row(i).transpose();
    prow.segment(n, m) = inst.B.row(i).transpose();
    prow(dim - 1) = 1;
    primal.add_row(prow, Sense::GreaterEqual, inst.a(i));
    slacks.emplace_back(prow, inst.a(i));
  }
  for (Index j = 0; j < inst.l(); ++j) {
    prow.head(n) = inst.C.row(j).transpose();
    prow.segment(n, m) = inst.D.row(j).transpose();
    prow(dim - 1) = 0;
    primal.add_row(prow, Sense::GreaterEqual, inst.b(j));
    slacks.emplace_back(prow, inst.b(j));
  }
  prow.setZero();
  prow(dim - 1) = 1;
  primal.add_row(prow, Sense::GreaterEqual, Rat(0));
  primal.add_row(prow, Sense::LessEqual, out.epsilon_cap);

  for (Index j = 0; j < dim; ++j) {
    VecQ unit = VecQ::Zero(dim);
    unit(j) = 1;
    slacks.emplace_back(unit, Rat(0));
  }
  for (const auto& [h, h0] : slacks) {
    const auto value = max_abs(primal, h, h0);
    if (!value) break;  // empty region: nothing to bound
    if (*value > out.primal) out.primal = *value;
  }

  out.dual = dual_vertex_bound(lifted);
  const Rat larger = out.primal > out.dual ? out.primal : out.dual;
  out.big_m = 2 * larger;
  if (out.big_m < 1) out.big_m = 1;
  return out;
}

Rat bound_big_m(const LiftedInstance& lifted) { return big_m_bounds(lifted).big_m; }

namespace {

// Big-M of a solve; an unbounded region with a certified improving ray
// becomes UnboundedError.
Rat solve_big_m(const LiftedInstance& lifted) {
  try {
    return bound_big_m(lifted);
  } catch (const UnboundedPolyhedronError&) {
    if (const auto ray = unbounded_ray_certificate(lifted.base)) throw UnboundedError("objective unbounded: " + *ray);
    throw;
  }
}

}  // namespace

MilpModel linearize_big_m(const ComplementaritySystem& sys, const Rat& big_m) {
  if (big_m <= 0) throw ValidationError("big-M must be positive");
  MilpModel model;
  model.variables = sys.variables;
  model.rows = sys.rows;
  model.objective = sys.objective;
  std::vector<Index> z;
  for (const auto& pair : sys.pairs) z.push_back(model.add_binary("z_" + pair.name));
  for (std::size_t i = 0; i < sys.pairs.size(); ++i) {
    const auto& pair = sys.pairs[i];
    VecQ dual_row = VecQ::Zero(model.num_vars());
    dual_row(pair.variable) = 1;
    dual_row(z[i]) = big_m;
    model.add_row("bigm_dual_" + pair.name, dual_row, Sense::LessEqual, big_m);
    VecQ slack_row = VecQ::Zero(model.num_vars());
    slack_row.head(pair.expression.size()) = pair.expression;
    slack_row(z[i]) = -big_m;
    model.add_row("bigm_slack_" + pair.name, slack_row, Sense::LessEqual, pair.constant);
  }
  return model;
}

MilpModel penalize(const ComplementaritySystem& sys, const Rat& big_m, const Rat& kappa) {
  if (kappa <= 0) throw ValidationError("kappa must be positive");
  MilpModel model = linearize_big_m(sys, big_m);
  model.rows.erase(model.rows.begin() + sys.epsilon_zero_row);
  model.objective(sys.layout.eps) += kappa;
  return model;
}

bool forced_duals_vanish(const KktLayout& layout, const VecQ& point) {
  for (Index i = 0; i < layout.k; ++i)
    if (point(layout.lambda + i) != 0) return false;
  return point(layout.eta) == 0;
}

bool big_m_stable(const ComplementaritySystem& sys, const Rat& big_m, const std::optional<Rat>& kappa) {
  auto build = [&](const Rat& M) { return kappa ? penalize(sys, M, *kappa) : linearize_big_m(sys, M); };
  const MilpOutcome base = solve_milp(build(big_m));
  const MilpOutcome doubled = solve_milp(build(2 * big_m));
  if (base.status != doubled.status) return false;
  return base.status != MilpStatus::Optimal || base.objective == doubled.objective;
}

BilevelSolution extract_solution(const KktLayout& layout, const VecQ& point) {
  BilevelSolution sol;
  sol.x = point.segment(layout.x, layout.n);
  sol.y = point.segment(layout.y, layout.m);
  sol.epsilon = point(layout.eps);
  return sol;
}

namespace {

MilpOutcome solve_checked(const MilpModel& model, const KktLayout& layout) {
  MilpOutcome out = solve_milp(model);
  if (out.status == MilpStatus::Infeasible) throw InfeasibleError("KKT reformulation is infeasible");
  if (out.status == MilpStatus::Unbounded) throw UnboundedError("KKT reformulation is unbounded");
  if (!forced_duals_vanish(layout, out.point)) throw CertificationError("lambda or eta nonzero at a MILP optimum");
  return out;
}

void certify(const BilevelInstance& inst, BilevelSolution& sol) {
  sol.certificate = check_bilevel_feasible(inst, sol.x, sol.y);
  if (!sol.certificate.feasible())
    throw CertificationError("reformulation optimum is not bilevel feasible: " + sol.certificate.describe());
  if (recompute_objective(inst, sol) != sol.objective)
    throw CertificationError("reformulation objective differs from the recomputed objective");
}

}  // namespace

BilevelSolution solve_kkt(const BilevelInstance& inst) {
  const LiftedInstance lifted = lift_coupling(inst);
  const ComplementaritySystem sys = kkt_reformulate(lifted);
  const MilpOutcome out = solve_checked(linearize_big_m(sys, solve_big_m(lifted)), sys.layout);
  BilevelSolution sol = extract_solution(sys.layout, out.point);
  sol.epsilon.reset();
  sol.method = Method::KktMilp;
  sol.objective = out.objective;
  certify(inst, sol);
  return sol;
}

BilevelSolution solve_penalty(const BilevelInstance& inst, const Rat& kappa) {
  const LiftedInstance lifted = lift_coupling(inst);
  const ComplementaritySystem sys = kkt_reformulate(lifted);
  const MilpOutcome out = solve_checked(penalize(sys, solve_big_m(lifted), kappa), sys.layout);
  BilevelSolution sol = extract_solution(sys.layout, out.point);
  sol.method = Method::Penalty;
  sol.kappa = kappa;
  sol.objective = out.objective;
  sol.certificate = check_bilevel_feasible(inst, sol.x, sol.y);
  return sol;
}

AutoKappaResult auto_kappa(const BilevelInstance& inst, const AutoKappaOptions& options) {
  if (options.initial <= 0) throw ValidationError("initial kappa must be positive");
  const LiftedInstance lifted = lift_coupling(inst);
  const ComplementaritySystem sys = kkt_reformulate(lifted);
  AutoKappaResult result;
  result.big_m = solve_big_m(lifted);
  bool violation_checked = false;
  Rat kappa = options.initial;
  for (int round = 0; round <= options.max_doublings; ++round, kappa *= 2) {
    const MilpOutcome out = solve_checked(penalize(sys, result.big_m, kappa), sys.layout);
    const Rat eps = out.point(sys.layout.eps);
    result.steps.push_back(KappaStep{kappa, out.objective, eps});
    if (eps == 0) {
      result.kappa = kappa;
      result.solution = extract_solution(sys.layout, out.point);
      result.solution.method = Method::Penalty;
      result.solution.kappa = kappa;
      result.solution.objective = out.objective;
      certify(inst, result.solution);
      return result;
    }
    if (!violation_checked) {
      // Smallest achievable eps; positive means the coupling rows can never hold.
      MilpModel least = penalize(sys, result.big_m, Rat(1));
      least.objective.setZero();
      least.objective(sys.layout.eps) = 1;
      const MilpOutcome floor = solve_milp(least);
      if (floor.status == MilpStatus::Optimal && floor.objective > 0)
        throw InfeasibleError("coupling rows cannot be satisfied (minimal violation " + to_string(floor.objective) + ")");
      violation_checked = true;
    }
  }
  throw LimitError("kappa search did not reach eps = 0 within the doubling limit");
}

namespace {

ordered_json bound_json(const std::optional<Rat>& b) { return b ? ordered_json(to_string(*b)) : ordered_json(nullptr); }

ordered_json variables_json(const std::vector<Variable>& vars) {
  ordered_json out = ordered_json::array();
  for (const auto& v : vars)
    out.push_back({{"name", v.name},
                   {"type", v.type == VarType::Binary ? "binary" : "continuous"},
                   {"lower", bound_json(v.lower)},
                   {"upper", bound_json(v.upper)}});
  return out;
}

ordered_json rows_json(const std::vector<LinearRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows)
    out.push_back({{"name", r.name},
                   {"coefficients", json_util::to_json(r.coefficients)},
                   {"sense", std::string(to_string(r.sense))},
                   {"rhs", to_string(r.rhs)}});
  return out;
}

// One top-level key per line; arrays of objects one element per line.
std::string layout_json(const ordered_json& doc) {
  std::ostringstream os;
  os << "{\n";
  std::size_t i = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
    os << "  " << ordered_json(it.key()).dump() << ": ";
    const auto& value = it.value();
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << "[\n";
      for (std::size_t j = 0; j < value.size(); ++j)
        os << "    " << value[j].dump() << (j + 1 < value.size() ? ",\n" : "\n");
      os << "  ]";
    } else {
      os << value.dump();
    }
    os << (i + 1 < doc.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string serialize_system(const ComplementaritySystem& sys) {
  ordered_json doc;
  doc["stage"] = "kkt";
  doc["variables"] = variables_json(sys.variables);
  doc["rows"] = rows_json(sys.rows);
  ordered_json pairs = ordered_json::array();
  for (const auto& p : sys.pairs)
    pairs.push_back({{"name", p.name},
                     {"variable", sys.variables[p.variable].name},
                     {"expression", json_util::to_json(p.expression)},
                     {"constant", to_string(p.constant)}});
  doc["pairs"] = std::move(pairs);
  doc["objective"] = {{"coefficients", json_util::to_json(sys.objective)}, {"constant", "0"}};
  return layout_json(doc);
}

std::string serialize_milp(const MilpModel& model, const Rat& big_m, const std::optional<Rat>& kappa) {
  ordered_json doc;
  doc["stage"] = kappa ? "penalty" : "milp";
  doc["big_m"] = to_string(big_m);
  if (kappa) doc["kappa"] = to_string(*kappa);
  doc["variables"] = variables_json(model.variables);
  ordered_json binaries = ordered_json::array();
  for (Index j : model.binaries()) binaries.push_back(model.variables[j].name);
  doc["binaries"] = std::move(binaries);
  doc["rows"] = rows_json(model.rows);
  doc["objective"] = {{"coefficients", json_util::to_json(model.objective)},
                      {"constant", to_string(model.objective_constant)}};
  return layout_json(doc);
}

}  // namespace blvl
