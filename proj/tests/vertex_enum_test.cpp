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


#include "blvl/linalg.hpp"
#include "blvl/vertex_enum.hpp"

#include <gtest/gtest.h>

namespace blvl {
namespace {

Polyhedron<Rat> unit_square() {
  Polyhedron<Rat> poly{MatQ::Zero(4, 2), VecQ(4), 0};
  poly.A(0, 0) = 1;
  poly.A(1, 0) = -1;
  poly.A(2, 1) = 1;
  poly.A(3, 1) = -1;
  poly.b << rat(0), rat(-1), rat(0), rat(-1);
  return poly;
}

TEST(Echelon, DetectsDependenceAndInconsistency) {
  Echelon<Rat> ech(2);
  VecQ r(2);
  r << rat(1), rat(1);
  EXPECT_EQ(ech.push(r, rat(2)), Echelon<Rat>::Insert::Independent);
  EXPECT_EQ(ech.push(r * rat(2), rat(4)), Echelon<Rat>::Insert::Dependent);
  EXPECT_EQ(ech.push(r * rat(2), rat(5)), Echelon<Rat>::Insert::Inconsistent);
  r << rat(1), rat(-1);
  EXPECT_EQ(ech.push(r, rat(0)), Echelon<Rat>::Insert::Independent);
  const VecQ z = ech.solve();
  EXPECT_EQ(z(0), rat(1));
  EXPECT_EQ(z(1), rat(1));
  ech.pop();
  EXPECT_EQ(ech.rank(), 1);
}

TEST(Linalg, ExactRankAndSolve) {
  MatQ M(2, 2);
  M << rat(2), rat(1), rat(4), rat(2);
  EXPECT_EQ(exact_rank(M), 1);
  VecQ h(2);
  h << rat(1), rat(1);
  EXPECT_FALSE(solve_square(M, h).has_value());
  M(1, 1) = 3;
  const auto z = solve_square(M, h);
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(same(times(M, *z), h));
}

TEST(VertexEnum, UnitSquare) {
  const auto out = enumerate_vertices(unit_square());
  ASSERT_EQ(out.vertices.size(), 4u);
  EXPECT_EQ(out.vertices[0](0), rat(0));
  EXPECT_EQ(out.vertices[3](1), rat(1));
  for (const auto& act : out.active) EXPECT_EQ(act.size(), 2u);
}

TEST(VertexEnum, WorkedExampleLowerRegion) {
  // {2x - y >= 0, -x - y >= -6, -x + 6y >= -3, x + 3y >= 3}
  Polyhedron<Rat> poly{MatQ(4, 2), VecQ(4), 0};
  poly.A << rat(2), rat(-1), rat(-1), rat(-1), rat(-1), rat(6), rat(1), rat(3);
  poly.b << rat(0), rat(-6), rat(-3), rat(3);
  const auto out = enumerate_vertices(poly);
  ASSERT_EQ(out.vertices.size(), 4u);
  const std::vector<std::pair<Rat, Rat>> expected = {
      {rat(3, 7), rat(6, 7)}, {rat(2), rat(4)}, {rat(3), rat(0)}, {rat(39, 7), rat(3, 7)}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(out.vertices[i](0), expected[i].first);
    EXPECT_EQ(out.vertices[i](1), expected[i].second);
  }
}

TEST(VertexEnum, DegenerateApexListedOnce) {
  // Pyramid apex where four facets meet.
  Polyhedron<Rat> poly{MatQ::Zero(5, 3), VecQ(5), 0};
  poly.A << rat(1), rat(0), rat(1), rat(-1), rat(0), rat(1), rat(0), rat(1), rat(1), rat(0), rat(-1), rat(1),
      rat(0), rat(0), rat(-1);
  poly.b << rat(0), rat(0), rat(0), rat(0), rat(-1);
  const auto out = enumerate_vertices(poly);
  EXPECT_EQ(out.vertices.size(), 5u);
}

TEST(VertexEnum, EqualitiesAreAlwaysActive) {
  Polyhedron<Rat> poly{MatQ::Zero(5, 2), VecQ(5), 1};
  poly.A.row(0) << rat(1), rat(1);
  poly.b(0) = 1;
  poly.A.bottomRows(4) = unit_square().A;
  poly.b.tail(4) = unit_square().b;
  const auto out = enumerate_vertices(poly);
  ASSERT_EQ(out.vertices.size(), 2u);
  for (const auto& v : out.vertices) EXPECT_EQ(v(0) + v(1), rat(1));
}

TEST(VertexEnum, UnboundedThrows) {
  Polyhedron<Rat> poly{MatQ::Zero(2, 2), VecQ::Zero(2), 0};
  poly.A(0, 0) = 1;
  poly.A(1, 1) = 1;
  EXPECT_THROW(enumerate_vertices(poly), UnboundedPolyhedronError);
  EXPECT_EQ(enumerate_vertices(poly, false).vertices.size(), 1u);
}

TEST(VertexEnum, DimensionDeficientThrows) {
  Polyhedron<Rat> poly{MatQ::Zero(2, 2), VecQ::Zero(2), 0};
  poly.A(0, 0) = 1;
  poly.A(1, 0) = -1;
  poly.b(1) = -1;
  EXPECT_THROW(enumerate_vertices(poly), UnboundedPolyhedronError);
}

TEST(VertexEnum, EmptyPolyhedronHasNoVertices) {
  auto poly = unit_square();
  poly.b(1) = 1;  // x <= -1 and x >= 0
  EXPECT_TRUE(enumerate_vertices(poly).vertices.empty());
}

}  // namespace
}  // namespace blvl
