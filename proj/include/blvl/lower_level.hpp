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

namespace blvl {

/// The follower LP at a fixed leader decision: min f^T y s.t. D y >= b - C x.
LpModel<Rat> lower_level_model(const BilevelInstance& inst, const VecQ& x);

/// Solves the follower LP at x. Row duals are the KKT multipliers mu.
LpOutcome<Rat> lower_level_solve(const BilevelInstance& inst, const VecQ& x);

/// Follower LP of the lifted problem over (y, eps).
LpOutcome<Rat> lifted_lower_level_solve(const LiftedInstance& lifted, const VecQ& x);

}  // namespace blvl
