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

#include "blvl/lower_level.hpp"

#include "blvl/errors.hpp"

namespace blvl {
namespace {

LpModel<Rat> follower_lp(const MatQ& C, const MatQ& D, const VecQ& b, const VecQ& f, const VecQ& x) {
  if (x.size() != C.cols()) throw ValidationError("leader point has wrong dimension");
  LpModel<Rat> lp(D.cols());
  lp.objective = f;
  lp.A = D;
  lp.rhs = b - times(C, x);
  lp.sense.assign(static_cast<std::size_t>(D.rows()), Sense::GreaterEqual);
  return lp;
}

}  // namespace

LpModel<Rat> lower_level_model(const BilevelInstance& inst, const VecQ& x) {
  return follower_lp(inst.C, inst.D, inst.b, inst.f, x);
}

LpOutcome<Rat> lower_level_solve(const BilevelInstance& inst, const VecQ& x) {
  return solve_lp(lower_level_model(inst, x));
}

LpOutcome<Rat> lifted_lower_level_solve(const LiftedInstance& lifted, const VecQ& x) {
  return solve_lp(
      follower_lp(lifted.lower_C(), lifted.lower_D(), lifted.lower_b(), lifted.follower_objective(), x));
}

}  // namespace blvl
