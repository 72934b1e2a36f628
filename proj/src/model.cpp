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

#include "blvl/model.hpp"

#include "json_util.hpp"

#include <sstream>

namespace blvl {

using json_util::json;
using json_util::ordered_json;

BilevelInstance BilevelInstance::zeros(Index n, Index m, Index p, Index k, Index l) {
  BilevelInstance inst;
  inst.n = n;
  inst.m = m;
  inst.c = VecQ::Zero(n);
  inst.d = VecQ::Zero(m);
  inst.f = VecQ::Zero(m);
  inst.G = MatQ::Zero(p, n);
  inst.g = VecQ::Zero(p);
  inst.A = MatQ::Zero(k, n);
  inst.B = MatQ::Zero(k, m);
  inst.a = VecQ::Zero(k);
  inst.C = MatQ::Zero(l, n);
  inst.D = MatQ::Zero(l, m);
  inst.b = VecQ::Zero(l);
  return inst;
}

bool operator==(const BilevelInstance& lhs, const BilevelInstance& rhs) {
  return lhs.n == rhs.n && lhs.m == rhs.m && same(lhs.c, rhs.c) && same(lhs.d, rhs.d) &&
         same(lhs.f, rhs.f) && same(lhs.G, rhs.G) && same(lhs.g, rhs.g) && same(lhs.A, rhs.A) &&
         same(lhs.B, rhs.B) && same(lhs.a, rhs.a) && same(lhs.C, rhs.C) && same(lhs.D, rhs.D) &&
         same(lhs.b, rhs.b);
}

namespace {

std::string shape(const MatQ& mat) { return std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()); }

void check_length(std::vector<std::string>& out, const char* block, const char* name, const VecQ& v,
                  Index expected) {
  if (v.size() != expected)
    out.push_back(std::string(block) + ": " + name + " has length " + std::to_string(v.size()) +
                  ", expected " + std::to_string(expected));
}

void check_shape(std::vector<std::string>& out, const char* block, const char* name, const MatQ& mat,
                 Index rows, Index cols) {
  if (mat.rows() != rows || mat.cols() != cols)
    out.push_back(std::string(block) + ": " + name + " is " + shape(mat) + ", expected " +
                  std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

std::vector<std::string> validate(const BilevelInstance& inst) {
  std::vector<std::string> out;
  if (inst.n < 0 || inst.m < 0) {
    out.push_back("objective: negative variable count");
    return out;
  }
  check_length(out, "objective", "c", inst.c, inst.n);
  check_length(out, "objective", "d", inst.d, inst.m);
  check_length(out, "objective", "f", inst.f, inst.m);
  if (inst.G.cols() != inst.n && inst.G.rows() > 0)
    out.push_back("X: G is " + shape(inst.G) + ", expected " + std::to_string(inst.n) + " columns");
  check_length(out, "X", "g", inst.g, inst.G.rows());
  check_shape(out, "coupling", "A", inst.A, inst.k(), inst.n);
  check_shape(out, "coupling", "B", inst.B, inst.k(), inst.m);
  check_shape(out, "lower", "C", inst.C, inst.l(), inst.n);
  check_shape(out, "lower", "D", inst.D, inst.l(), inst.m);
  return out;
}

BilevelInstance parse_instance(std::string_view text) {
  using namespace json_util;
  const json doc = parse_strict(text);
  require_object(doc, "instance");
  only_keys(doc, {"n", "m", "c", "d", "f", "X", "coupling", "lower"}, "instance");

  BilevelInstance inst;
  inst.n = count(doc, "n", "instance");
  inst.m = count(doc, "m", "instance");
  inst.c = vector(field(doc, "c", "instance"), "c");
  inst.d = vector(field(doc, "d", "instance"), "d");
  inst.f = vector(field(doc, "f", "instance"), "f");

  const json& X = field(doc, "X", "instance");
  require_object(X, "X");
  only_keys(X, {"G", "g"}, "X");
  inst.G = matrix(field(X, "G", "X"), inst.n, "X.G");
  inst.g = vector(field(X, "g", "X"), "X.g");

  const json& coupling = field(doc, "coupling", "instance");
  require_object(coupling, "coupling");
  only_keys(coupling, {"A", "B", "a"}, "coupling");
  inst.A = matrix(field(coupling, "A", "coupling"), inst.n, "coupling.A");
  inst.B = matrix(field(coupling, "B", "coupling"), inst.m, "coupling.B");
  inst.a = vector(field(coupling, "a", "coupling"), "coupling.a");

  const json& lower = field(doc, "lower", "instance");
  require_object(lower, "lower");
  only_keys(lower, {"C", "D", "b"}, "lower");
  inst.C = matrix(field(lower, "C", "lower"), inst.n, "lower.C");
  inst.D = matrix(field(lower, "D", "lower"), inst.m, "lower.D");
  inst.b = vector(field(lower, "b", "lower"), "lower.b");

  const auto issues = validate(inst);
  if (!issues.empty()) throw ParseError("dimension mismatch: " + issues.front());
  return inst;
}

namespace {

std::string vec_text(const VecQ& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + to_string(v(i)) + "\"";
  }
  return out + "]";
}

std::string mat_text(const MatQ& mat) {
  std::string out = "[";
  for (Index i = 0; i < mat.rows(); ++i) {
    if (i > 0) out += ",";
    out += vec_text(mat.row(i).transpose());
  }
  return out + "]";
}

}  // namespace

std::string serialize_instance(const BilevelInstance& inst) {
  std::ostringstream os;
  os << "{ \"n\": " << inst.n << ", \"m\": " << inst.m << ",\n"
     << "  \"c\": " << vec_text(inst.c) << ", \"d\": " << vec_text(inst.d) << ", \"f\": " << vec_text(inst.f)
     << ",\n"
     << "  \"X\": { \"G\": " << mat_text(inst.G) << ", \"g\": " << vec_text(inst.g) << " },\n"
     << "  \"coupling\": { \"A\": " << mat_text(inst.A) << ", \"B\": " << mat_text(inst.B)
     << ", \"a\": " << vec_text(inst.a) << " },\n"
     << "  \"lower\": { \"C\": " << mat_text(inst.C) << ",\n"
     << "             \"D\": " << mat_text(inst.D) << ",\n"
     << "             \"b\": " << vec_text(inst.b) << " } }\n";
  return os.str();
}

MatQ LiftedInstance::lower_C() const {
  const Index k = base.k();
  const Index l = base.l();
  MatQ out = MatQ::Zero(lower_rows(), base.n);
  if (k > 0) out.topRows(k) = base.A;
  if (l > 0) out.middleRows(k, l) = base.C;
  return out;
}

MatQ LiftedInstance::lower_D() const {
  const Index k = base.k();
  const Index l = base.l();
  const Index m = base.m;
  MatQ out = MatQ::Zero(lower_rows(), m + 1);
  if (k > 0) {
    out.block(0, 0, k, m) = base.B;
    out.block(0, m, k, 1).setOnes();
  }
  if (l > 0) out.block(k, 0, l, m) = base.D;
  out(k + l, m) = 1;
  return out;
}

VecQ LiftedInstance::lower_b() const {
  VecQ out = VecQ::Zero(lower_rows());
  if (base.k() > 0) out.head(base.k()) = base.a;
  if (base.l() > 0) out.segment(base.k(), base.l()) = base.b;
  return out;
}

VecQ LiftedInstance::follower_objective() const {
  VecQ out = VecQ::Zero(base.m + 1);
  if (base.m > 0) out.head(base.m) = base.f;
  return out;
}

BilevelInstance LiftedInstance::as_instance() const {
  const Index m = base.m;
  BilevelInstance out = BilevelInstance::zeros(base.n, m + 1, base.p(), 2, lower_rows());
  out.c = base.c;
  if (m > 0) out.d.head(m) = base.d;
  out.f = follower_objective();
  out.G = base.G;
  out.g = base.g;
  out.B(0, m) = 1;
  out.B(1, m) = -1;
  out.C = lower_C();
  out.D = lower_D();
  out.b = lower_b();
  return out;
}

Index MilpModel::add_variable(std::string name, VarType type, std::optional<Rat> lower,
                              std::optional<Rat> upper) {
  const Index j = num_vars();
  variables.push_back(Variable{std::move(name), type, std::move(lower), std::move(upper)});
  objective.conservativeResize(j + 1);
  objective(j) = 0;
  for (auto& row : rows) {
    row.coefficients.conservativeResize(j + 1);
    row.coefficients(j) = 0;
  }
  return j;
}

void MilpModel::add_row(std::string name, VecQ coefficients, Sense sense, Rat rhs) {
  if (coefficients.size() != num_vars())
    throw ValidationError("row \"" + name + "\" references undeclared variables");
  rows.push_back(LinearRow{std::move(name), std::move(coefficients), sense, std::move(rhs)});
}

std::optional<Index> MilpModel::find_variable(std::string_view name) const {
  for (Index j = 0; j < num_vars(); ++j)
    if (variables[j].name == name) return j;
  return std::nullopt;
}

std::optional<Index> MilpModel::find_row(std::string_view name) const {
  for (Index i = 0; i < num_rows(); ++i)
    if (rows[i].name == name) return i;
  return std::nullopt;
}

std::vector<Index> MilpModel::binaries() const {
  std::vector<Index> out;
  for (Index j = 0; j < num_vars(); ++j)
    if (variables[j].type == VarType::Binary) out.push_back(j);
  return out;
}

LpModel<Rat> MilpModel::relaxation() const {
  LpModel<Rat> lp(num_vars());
  lp.objective = objective;
  lp.A = MatQ::Zero(num_rows(), num_vars());
  lp.rhs = VecQ::Zero(num_rows());
  lp.sense.reserve(rows.size());
  for (Index i = 0; i < num_rows(); ++i) {
    lp.A.row(i) = rows[i].coefficients.transpose();
    lp.rhs(i) = rows[i].rhs;
    lp.sense.push_back(rows[i].sense);
  }
  for (Index j = 0; j < num_vars(); ++j) {
    lp.lower[j] = variables[j].lower;
    lp.upper[j] = variables[j].upper;
  }
  return lp;
}

std::vector<std::string> MilpModel::check(const VecQ& point) const {
  std::vector<std::string> out = check_primal(relaxation(), point);
  if (point.size() != num_vars()) return out;
  for (Index j : binaries())
    if (point(j) != 0 && point(j) != 1) out.push_back("binary " + variables[j].name + " is fractional");
  return out;
}

std::vector<std::string> validate(const MilpModel& model) {
  std::vector<std::string> out;
  if (model.objective.size() != model.num_vars()) out.push_back("objective length differs from variable count");
  for (const auto& v : model.variables)
    if (v.type == VarType::Binary && (!v.lower || !v.upper || *v.lower != 0 || *v.upper != 1))
      out.push_back("binary " + v.name + " must have bounds [0, 1]");
  for (const auto& row : model.rows)
    if (row.coefficients.size() != model.num_vars())
      out.push_back("row " + row.name + " references undeclared variables");
  return out;
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Oracle: return "oracle";
    case Method::KktMilp: return "kkt-milp";
    case Method::Penalty: return "penalty";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "oracle") return Method::Oracle;
  if (text == "kkt-milp" || text == "kkt") return Method::KktMilp;
  if (text == "penalty") return Method::Penalty;
  throw ParseError("unknown method \"" + std::string(text) + "\"");
}

std::string FeasibilityReport::describe() const {
  if (violations.empty()) return "feasible";
  std::string out;
  for (const auto& v : violations) out += v.condition + " (residual " + to_string(v.residual) + ")\n";
  return out;
}

Rat recompute_objective(const BilevelInstance& inst, const BilevelSolution& sol) {
  Rat value = inst.leader_objective(sol.x, sol.y);
  if (sol.method == Method::Penalty && sol.kappa && sol.epsilon) value += *sol.kappa * *sol.epsilon;
  return value;
}

std::string serialize_solution(const BilevelSolution& sol) {
  ordered_json doc;
  doc["method"] = std::string(to_string(sol.method));
  if (sol.kappa) doc["kappa"] = to_string(*sol.kappa);
  doc["x"] = json_util::to_json(sol.x);
  doc["y"] = json_util::to_json(sol.y);
  if (sol.epsilon) doc["epsilon"] = to_string(*sol.epsilon);
  doc["objective"] = to_string(sol.objective);
  ordered_json cert = ordered_json::array();
  for (const auto& v : sol.certificate.violations)
    cert.push_back(ordered_json{{"condition", v.condition}, {"residual", to_string(v.residual)}});
  doc["certificate"] = std::move(cert);
  return doc.dump(2) + "\n";
}

BilevelSolution parse_solution(std::string_view text) {
  using namespace json_util;
  const json doc = parse_strict(text);
  require_object(doc, "solution");
  only_keys(doc, {"method", "kappa", "x", "y", "epsilon", "objective", "certificate"}, "solution");
  BilevelSolution sol;
  const json& method = field(doc, "method", "solution");
  if (!method.is_string()) throw ParseError("solution: method must be a string");
  sol.method = parse_method(method.get_ref<const std::string&>());
  if (doc.contains("kappa")) sol.kappa = rational(doc["kappa"], "kappa");
  sol.x = vector(field(doc, "x", "solution"), "x");
  sol.y = vector(field(doc, "y", "solution"), "y");
  if (doc.contains("epsilon")) sol.epsilon = rational(doc["epsilon"], "epsilon");
  sol.objective = rational(field(doc, "objective", "solution"), "objective");
  if (doc.contains("certificate")) {
    const json& cert = doc["certificate"];
    if (!cert.is_array()) throw ParseError("solution: certificate must be an array");
    for (const auto& item : cert) {
      require_object(item, "certificate entry");
      const json& cond = field(item, "condition", "certificate entry");
      if (!cond.is_string()) throw ParseError("certificate entry: condition must be a string");
      sol.certificate.violations.push_back(
          Violation{cond.get<std::string>(), rational(field(item, "residual", "certificate entry"), "residual")});
    }
  }
  return sol;
}

}  // namespace blvl
