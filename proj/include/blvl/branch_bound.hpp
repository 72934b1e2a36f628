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

#include "blvl/model.hpp"
#include "blvl/simplex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace blvl {

using MilpStatus = LpStatus;

/// Global lower bound after a node was popped. nullopt stands for minus
/// infinity (the node's relaxation was unbounded).
struct BoundLogEntry {
  std::int64_t node = 0;
  std::optional<Rat> bound;
  std::optional<Rat> incumbent;
};

struct MilpOutcome {
  MilpStatus status = MilpStatus::Infeasible;
  VecQ point;          // optimal incumbent; for Unbounded a feasible point
  Rat objective{0};    // includes the model's objective constant
  std::int64_t nodes = 0;
  std::int64_t lp_solves = 0;
  std::vector<BoundLogEntry> bound_log;
  std::vector<VecQ> incumbents;  // every improving incumbent, in order
};

struct MilpOptions {
  std::int64_t node_limit = 2'000'000;
};

/// Best-first branch and bound over the binaries. Branches on the most
/// fractional binary (lowest index on ties); pops the lowest bound first
/// (insertion order on ties); keeps the first incumbent reaching the
/// optimal value. Throws LimitError past the node limit.
MilpOutcome solve_milp(const MilpModel& model, const MilpOptions& options = {});

struct EnumerationOptions {
  std::size_t max_binaries = 20;
};

/// Solves the LP for every 0/1 assignment of the binaries and keeps the
/// best one (lowest pattern index on ties, bit i = binary i). Throws
/// LimitError when the model has more than max_binaries binaries.
MilpOutcome enumerate_all_binary_patterns(const MilpModel& model, const EnumerationOptions& options = {});

}  // namespace blvl
