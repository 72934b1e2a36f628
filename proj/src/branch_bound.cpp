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

#include "blvl/branch_bound.hpp"

#include "blvl/errors.hpp"

#include <queue>

namespace blvl {
namespace {

struct Node {
  std::optional<Rat> bound;          // parent relaxation value
  std::int64_t seq = 0;
  std::vector<signed char> fixing;   // per binary: -1 free, 0, 1
};

// Lowest bound first (minus infinity before everything), then insertion.
struct Later {
  bool operator()(const Node& lhs, const Node& rhs) const {
    if (lhs.bound.has_value() != rhs.bound.has_value()) return lhs.bound.has_value();
    if (lhs.bound && *lhs.bound != *rhs.bound) return *lhs.bound > *rhs.bound;
    return lhs.seq > rhs.seq;
  }
};

LpModel<Rat> restricted(const LpModel<Rat>& base, const std::vector<Index>& binaries,
                        const std::vector<signed char>& fixing) {
  LpModel<Rat> lp = base;
  for (std::size_t i = 0; i < binaries.size(); ++i) {
    if (fixing[i] < 0) continue;
    lp.lower[binaries[i]] = Rat(fixing[i]);
    lp.upper[binaries[i]] = Rat(fixing[i]);
  }
  return lp;
}

void certify_incumbent(const MilpModel& model, const VecQ& point) {
  const auto issues = model.check(point);
  if (!issues.empty()) throw CertificationError("incumbent is infeasible: " + issues.front());
}

}  // namespace

MilpOutcome solve_milp(const MilpModel& model, const MilpOptions& options) {
  if (const auto issues = validate(model); !issues.empty()) throw ValidationError(issues.front());
  const LpModel<Rat> base = model.relaxation();
  const std::vector<Index> binaries = model.binaries();
  const Rat half = rat(1, 2);

  MilpOutcome out;
  std::optional<Rat> incumbent;  // LP objective, without the constant
  std::priority_queue<Node, std::vector<Node>, Later> open;
  std::int64_t seq = 0;
  open.push(Node{std::nullopt, seq++, std::vector<signed char>(binaries.size(), -1)});

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (incumbent && node.bound && *node.bound >= *incumbent) break;  // best-first: nothing better remains
    if (++out.nodes > options.node_limit) throw LimitError("branch-and-bound node limit exceeded");

    // Best-first: the popped bound is the minimum over all open nodes.
    out.bound_log.push_back(BoundLogEntry{out.nodes, node.bound, incumbent});

    const LpOutcome<Rat> lp = solve_lp(restricted(base, binaries, node.fixing));
    ++out.lp_solves;
    if (lp.status == LpStatus::Infeasible) continue;

    if (lp.status == LpStatus::Unbounded) {
      std::size_t free_index = binaries.size();
      for (std::size_t i = 0; i < binaries.size(); ++i)
        if (node.fixing[i] < 0) {
          free_index = i;
          break;
        }
      if (free_index == binaries.size()) {
        // Every binary fixed: a feasible mixed-integer point with an improving ray.
        out.status = MilpStatus::Unbounded;
        out.point = lp.x;
        out.objective = lp.objective + model.objective_constant;
        return out;
      }
      for (signed char value : {0, 1}) {
        Node child{std::nullopt, seq++, node.fixing};
        child.fixing[free_index] = value;
        open.push(std::move(child));
      }
      continue;
    }

    if (incumbent && lp.objective >= *incumbent) continue;

    std::size_t branch = binaries.size();
    Rat best_distance(0);
    for (std::size_t i = 0; i < binaries.size(); ++i) {
      const Rat& v = lp.x(binaries[i]);
      if (v == 0 || v == 1) continue;
      const Rat distance = v < half ? v : Rat(1 - v);
      if (branch == binaries.size() || distance > best_distance) {
        branch = i;
        best_distance = distance;
      }
    }
    if (branch == binaries.size()) {
      certify_incumbent(model, lp.x);
      incumbent = lp.objective;
      out.point = lp.x;
      out.incumbents.push_back(lp.x);
      continue;
    }
    for (signed char value : {0, 1}) {
      Node child{lp.objective, seq++, node.fixing};
      child.fixing[branch] = value;
      open.push(std::move(child));
    }
  }

  if (!incumbent) {
    out.status = MilpStatus::Infeasible;
    return out;
  }
  out.status = MilpStatus::Optimal;
  out.objective = *incumbent + model.objective_constant;
  out.bound_log.push_back(BoundLogEntry{out.nodes, incumbent, incumbent});
  return out;
}

MilpOutcome enumerate_all_binary_patterns(const MilpModel& model, const EnumerationOptions& options) {
  if (const auto issues = validate(model); !issues.empty()) throw ValidationError(issues.front());
  const std::vector<Index> binaries = model.binaries();
  if (binaries.size() > options.max_binaries)
    throw LimitError("enumeration limit exceeded: " + std::to_string(binaries.size()) + " binaries");
  const LpModel<Rat> base = model.relaxation();

  MilpOutcome out;
  std::optional<Rat> best;
  const std::uint64_t patterns = std::uint64_t{1} << binaries.size();
  std::vector<signed char> fixing(binaries.size());
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    for (std::size_t i = 0; i < binaries.size(); ++i) fixing[i] = static_cast<signed char>((pattern >> i) & 1U);
    const LpOutcome<Rat> lp = solve_lp(restricted(base, binaries, fixing));
    ++out.lp_solves;
    ++out.nodes;
    if (lp.status == LpStatus::Infeasible) continue;
    if (lp.status == LpStatus::Unbounded) {
      out.status = MilpStatus::Unbounded;
      out.point = lp.x;
      out.objective = lp.objective + model.objective_constant;
      return out;
    }
    if (!best || lp.objective < *best) {
      best = lp.objective;
      out.point = lp.x;
    }
  }
  if (!best) return out;
  certify_incumbent(model, out.point);
  out.status = MilpStatus::Optimal;
  out.objective = *best + model.objective_constant;
  return out;
}

}  // namespace blvl
