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


#include "blvl/simplex.hpp"
#include "blvl/vertex_enum.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <random>

namespace blvl {
namespace {

VecQ vec(std::initializer_list<long> values) {
  VecQ out(static_cast<Index>(values.size()));
  Index i = 0;
  for (long v : values) out(i++) = rat(v);
  return out;
}

TEST(Simplex, SolvesSmallLp) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0
  LpModel<Rat> lp(2);
  lp.add_row(vec({1, 2}), Sense::LessEqual, rat(4));
  lp.add_row(vec({3, 1}), Sense::LessEqual, rat(6));
  lp.lower = {rat(0), rat(0)};
  lp.objective = vec({-1, -1});
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.x(0), rat(8, 5));
  EXPECT_EQ(out.x(1), rat(6, 5));
  EXPECT_EQ(out.objective, rat(-14, 5));
  EXPECT_TRUE(verify_outcome(lp, out).empty());
}

TEST(Simplex, FollowerOfWorkedExample) {
  // min -y s.t. D y >= b - C x at x = 3/7
  LpModel<Rat> lp(1);
  const Rat x = rat(3, 7);
  lp.add_row(vec({-1}), Sense::GreaterEqual, -2 * x);
  lp.add_row(vec({-1}), Sense::GreaterEqual, rat(-6) + x);
  lp.add_row(vec({6}), Sense::GreaterEqual, rat(-3) + x);
  lp.add_row(vec({3}), Sense::GreaterEqual, rat(3) - x);
  lp.objective = vec({-1});
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.x(0), rat(6, 7));
}

TEST(Simplex, InfeasibleCarriesFarkasCertificate) {
  LpModel<Rat> lp(1);
  lp.add_row(vec({1}), Sense::GreaterEqual, rat(2));
  lp.add_row(vec({1}), Sense::LessEqual, rat(1));
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Infeasible);
  EXPECT_TRUE(verify_outcome(lp, out).empty());
}

TEST(Simplex, UnboundedCarriesRay) {
  LpModel<Rat> lp(2);
  lp.add_row(vec({1, -1}), Sense::GreaterEqual, rat(0));
  lp.lower = {rat(0), rat(0)};
  lp.objective = vec({-1, 0});
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Unbounded);
  EXPECT_TRUE(verify_outcome(lp, out).empty());
}

TEST(Simplex, HandlesEveryBoundKind) {
  // free, lower-only, upper-only, two-sided, fixed
  LpModel<Rat> lp(5);
  lp.add_row(vec({1, 1, 1, 1, 1}), Sense::Equal, rat(3));
  lp.add_row(vec({1, 0, 0, 0, 0}), Sense::GreaterEqual, rat(-2));
  lp.lower = {std::nullopt, rat(1), std::nullopt, rat(-1), rat(2)};
  lp.upper = {std::nullopt, std::nullopt, rat(5), rat(1), rat(2)};
  lp.objective = vec({1, 2, -1, 0, 7});
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_TRUE(check_primal(lp, out.x).empty());
  EXPECT_EQ(out.x(4), rat(2));
  EXPECT_TRUE(verify_outcome(lp, out).empty());
}

TEST(Simplex, DegenerateCyclingExampleTerminates) {
  // Beale's example, which cycles under the textbook ratio rule.
  LpModel<Rat> lp(4);
  VecQ r1(4), r2(4), r3(4), c(4);
  r1 << rat(1, 4), rat(-60), rat(-1, 25), rat(9);
  r2 << rat(1, 2), rat(-90), rat(-1, 50), rat(3);
  r3 << rat(0), rat(0), rat(1), rat(0);
  c << rat(-3, 4), rat(150), rat(-1, 50), rat(6);
  lp.add_row(r1, Sense::LessEqual, rat(0));
  lp.add_row(r2, Sense::LessEqual, rat(0));
  lp.add_row(r3, Sense::LessEqual, rat(1));
  lp.lower.assign(4, Rat(0));
  lp.objective = c;
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.objective, rat(-1, 20));
}

TEST(Simplex, RunsOverSecondExactField) {
  using Q = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
  LpModel<Q> lp(2);
  VectorX<Q> r1(2), r2(2), c(2);
  r1 << Q(1), Q(2);
  r2 << Q(3), Q(1);
  c << Q(-1), Q(-1);
  lp.add_row(r1, Sense::LessEqual, Q(4));
  lp.add_row(r2, Sense::LessEqual, Q(6));
  lp.lower = {Q(0), Q(0)};
  lp.objective = c;
  const auto out = solve_lp(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.objective, Q(-14) / 5);
}

TEST(Simplex, RejectsInconsistentShapes) {
  LpModel<Rat> lp(2);
  lp.add_row(vec({1, 1}), Sense::GreaterEqual, rat(0));
  lp.rhs.resize(2);
  EXPECT_THROW(solve_lp(lp), ValidationError);
}

// Property: on random bounded polytopes the simplex optimum equals the
// best vertex found by enumeration.
TEST(SimplexProperty, MatchesVertexEnumeration) {
  std::mt19937_64 engine(99);
  auto draw = [&] { return rat(static_cast<long>(engine() % 9) - 4); };
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 1 + trial % 3, rows = 2 + trial % 4;
    Polyhedron<Rat> poly{MatQ(rows + 2 * n, n), VecQ(rows + 2 * n), 0};
    poly.A.setZero();
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < n; ++j) poly.A(i, j) = draw();
      poly.b(i) = draw();
    }
    for (Index j = 0; j < n; ++j) {
      poly.A(rows + 2 * j, j) = 1;
      poly.b(rows + 2 * j) = -5;
      poly.A(rows + 2 * j + 1, j) = -1;
      poly.b(rows + 2 * j + 1) = -5;
    }
    LpModel<Rat> lp = poly.as_lp();
    for (Index j = 0; j < n; ++j) lp.objective(j) = draw();
    const auto out = solve_lp(lp);
    const auto vertices = enumerate_vertices(poly);
    if (vertices.vertices.empty()) {
      EXPECT_EQ(out.status, LpStatus::Infeasible);
      continue;
    }
    ASSERT_EQ(out.status, LpStatus::Optimal);
    Rat best = dot(lp.objective, vertices.vertices.front());
    for (const auto& v : vertices.vertices) best = std::min(best, dot(lp.objective, v));
    EXPECT_EQ(out.objective, best) << "trial " << trial;
    EXPECT_TRUE(verify_outcome(lp, out).empty());
  }
}

TEST(SimplexProperty, AuditCountsEveryVerifiedSolve) {
  const auto before = lp_audit().optimal.load() + lp_audit().infeasible.load() + lp_audit().unbounded.load();
  LpModel<Rat> lp(1);
  lp.add_row(vec({1}), Sense::GreaterEqual, rat(1));
  lp.objective = vec({1});
  solve_lp(lp);
  const auto after = lp_audit().optimal.load() + lp_audit().infeasible.load() + lp_audit().unbounded.load();
  EXPECT_EQ(after, before + 1);
}

}  // namespace
}  // namespace blvl
