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
#include "blvl/transform.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace blvl {
namespace {

VecQ vec(std::initializer_list<Rat> values) {
  VecQ out(static_cast<Index>(values.size()));
  Index i = 0;
  for (const Rat& v : values) out(i++) = v;
  return out;
}

TEST(BranchBound, SingleBinary) {
  MilpModel model;
  model.add_binary("z");
  model.add_row("r", vec({rat(1)}), Sense::GreaterEqual, rat(1));
  model.objective = vec({rat(1)});
  const MilpOutcome out = solve_milp(model);
  ASSERT_EQ(out.status, MilpStatus::Optimal);
  EXPECT_EQ(out.objective, rat(1));
  EXPECT_EQ(out.point(0), rat(1));
}

TEST(BranchBound, KnapsackMatchesEnumeration) {
  // max 5a + 4b + 3c s.t. 2a + 3b + c <= 5, 4a + b + 2c <= 11, 3a + 4b + 2c <= 8
  MilpModel model;
  for (const char* name : {"a", "b", "c"}) model.add_binary(name);
  model.add_row("w1", vec({rat(2), rat(3), rat(1)}), Sense::LessEqual, rat(5));
  model.add_row("w2", vec({rat(4), rat(1), rat(2)}), Sense::LessEqual, rat(11));
  model.add_row("w3", vec({rat(3), rat(4), rat(2)}), Sense::LessEqual, rat(8));
  model.objective = vec({rat(-5), rat(-4), rat(-3)});
  const MilpOutcome bb = solve_milp(model);
  const MilpOutcome all = enumerate_all_binary_patterns(model);
  ASSERT_EQ(bb.status, MilpStatus::Optimal);
  EXPECT_EQ(bb.objective, rat(-9));
  EXPECT_EQ(bb.objective, all.objective);
  EXPECT_EQ(all.lp_solves, 8);
}

TEST(BranchBound, BoundLogIsMonotoneAndEndsAtIncumbent) {
  MilpModel model;
  model.add_variable("x", VarType::Continuous, Rat(0));
  for (int i = 0; i < 4; ++i) model.add_binary("z" + std::to_string(i));
  model.add_row("cover", vec({rat(1), rat(3, 2), rat(5, 2), rat(7, 3), rat(1, 2)}), Sense::GreaterEqual, rat(7, 2));
  model.objective = vec({rat(3), rat(2), rat(3), rat(3), rat(1)});
  const MilpOutcome out = solve_milp(model);
  ASSERT_EQ(out.status, MilpStatus::Optimal);
  ASSERT_FALSE(out.bound_log.empty());
  for (std::size_t i = 1; i < out.bound_log.size(); ++i)
    if (out.bound_log[i - 1].bound && out.bound_log[i].bound)
      EXPECT_LE(*out.bound_log[i - 1].bound, *out.bound_log[i].bound);
  EXPECT_EQ(out.bound_log.back().incumbent, out.objective);
  EXPECT_EQ(out.objective, enumerate_all_binary_patterns(model).objective);
  for (std::size_t i = 1; i < out.incumbents.size(); ++i)
    EXPECT_LT(model.evaluate(out.incumbents[i]), model.evaluate(out.incumbents[i - 1]));
}

TEST(BranchBound, NoBinariesIsOneLp) {
  MilpModel model;
  model.add_variable("x", VarType::Continuous, Rat(0));
  model.add_row("r", vec({rat(1)}), Sense::GreaterEqual, rat(2));
  model.objective = vec({rat(3)});
  const MilpOutcome out = solve_milp(model);
  EXPECT_EQ(out.lp_solves, 1);
  EXPECT_EQ(out.objective, rat(6));
  EXPECT_EQ(enumerate_all_binary_patterns(model).lp_solves, 1);
}

TEST(BranchBound, InfeasibleAndUnbounded) {
  MilpModel model;
  model.add_binary("z");
  model.add_row("r", vec({rat(1)}), Sense::GreaterEqual, rat(2));
  EXPECT_EQ(solve_milp(model).status, MilpStatus::Infeasible);
  const MilpOutcome all = enumerate_all_binary_patterns(model);
  EXPECT_EQ(all.status, MilpStatus::Infeasible);
  EXPECT_EQ(all.lp_solves, 2);

  MilpModel open;
  open.add_binary("z");
  open.add_variable("x", VarType::Continuous);
  open.objective = vec({rat(0), rat(-1)});
  EXPECT_EQ(solve_milp(open).status, MilpStatus::Unbounded);
  EXPECT_EQ(enumerate_all_binary_patterns(open).status, MilpStatus::Unbounded);
}

TEST(BranchBound, Limits) {
  MilpModel model;
  for (int i = 0; i < 3; ++i) model.add_binary("z" + std::to_string(i));
  EXPECT_THROW(enumerate_all_binary_patterns(model, EnumerationOptions{2}), LimitError);
  model.add_row("half", vec({rat(2), rat(2), rat(2)}), Sense::Equal, rat(3));
  EXPECT_THROW(solve_milp(model, MilpOptions{1}), LimitError);
}

TEST(BranchBound, WorkedExampleKktMilp) {
  const LiftedInstance lifted = lift_coupling(testing::load("example2.json"));
  const ComplementaritySystem sys = kkt_reformulate(lifted);
  const MilpModel model = linearize_big_m(sys, bound_big_m(lifted));
  const MilpOutcome bb = solve_milp(model);
  const MilpOutcome all = enumerate_all_binary_patterns(model);
  EXPECT_EQ(all.lp_solves, 64);
  ASSERT_EQ(bb.status, MilpStatus::Optimal);
  EXPECT_EQ(bb.objective, rat(39, 7));
  EXPECT_EQ(all.objective, rat(39, 7));
  EXPECT_EQ(bb.point(sys.layout.x), rat(3, 7));
  EXPECT_EQ(bb.point(sys.layout.y), rat(6, 7));
}

TEST(BranchBound, NegatedExamplePenalized) {
  const LiftedInstance lifted = lift_coupling(testing::load("example2_negated.json"));
  const ComplementaritySystem sys = kkt_reformulate(lifted);
  const MilpOutcome out = solve_milp(penalize(sys, bound_big_m(lifted), rat(1)));
  ASSERT_EQ(out.status, MilpStatus::Optimal);
  EXPECT_EQ(out.objective, rat(-257, 12));
  EXPECT_EQ(out.point(sys.layout.x), rat(35, 12));
  EXPECT_EQ(out.point(sys.layout.y), rat(37, 12));
  EXPECT_EQ(out.point(sys.layout.eps), rat(0));
}

// Property: random bounded mixed-binary models agree with enumeration.
TEST(BranchBoundProperty, MatchesEnumeration) {
  std::mt19937_64 engine(7);
  auto draw = [&] { return rat(static_cast<long>(engine() % 11) - 5); };
  for (int trial = 0; trial < 40; ++trial) {
    MilpModel model;
    const int q = 1 + trial % 4, c = 1 + trial % 2;
    for (int i = 0; i < q; ++i) model.add_binary("z" + std::to_string(i));
    for (int j = 0; j < c; ++j) model.add_variable("x" + std::to_string(j), VarType::Continuous, Rat(-3), Rat(3));
    for (int r = 0; r < 3; ++r) {
      VecQ row(model.num_vars());
      for (Index j = 0; j < row.size(); ++j) row(j) = draw();
      model.add_row("r" + std::to_string(r), row, Sense::GreaterEqual, draw());
    }
    for (Index j = 0; j < model.num_vars(); ++j) model.objective(j) = draw();
    const MilpOutcome bb = solve_milp(model);
    const MilpOutcome all = enumerate_all_binary_patterns(model);
    ASSERT_EQ(bb.status, all.status) << "trial " << trial;
    if (bb.status == MilpStatus::Optimal) {
      EXPECT_EQ(bb.objective, all.objective) << "trial " << trial;
      EXPECT_TRUE(model.check(bb.point).empty());
    }
  }
}

}  // namespace
}  // namespace blvl
