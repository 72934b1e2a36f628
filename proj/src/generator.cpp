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


#include "blvl/generator.hpp"

#include "blvl/errors.hpp"
#include "blvl/oracle.hpp"

#include <limits>
#include <random>

namespace blvl {
namespace {

// Portable uniform integer in [-range, range]; std distributions differ
// between standard libraries.
class Draw {
 public:
  Draw(std::uint64_t seed, long range) : engine_(seed), range_(range) {}

  Rat operator()() {
    const std::uint64_t width = 2 * static_cast<std::uint64_t>(range_) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % width;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return rat(static_cast<long>(v % width) - range_);
  }

  MatQ matrix(Index rows, Index cols) {
    MatQ out(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) out(i, j) = (*this)();
    return out;
  }

  VecQ vector(Index size) {
    VecQ out(size);
    for (Index i = 0; i < size; ++i) out(i) = (*this)();
    return out;
  }

 private:
  std::mt19937_64 engine_;
  long range_;
};

// Rows lo <= v_i <= hi for every coordinate, in >= form.
void append_box(MatQ& M, VecQ& rhs, Index dim, const Rat& bound) {
  const Index base = M.rows();
  M.conservativeResize(base + 2 * dim, dim);
  rhs.conservativeResize(base + 2 * dim);
  M.bottomRows(2 * dim).setZero();
  for (Index i = 0; i < dim; ++i) {
    M(base + 2 * i, i) = 1;
    rhs(base + 2 * i) = -bound;
    M(base + 2 * i + 1, i) = -1;
    rhs(base + 2 * i + 1) = -bound;
  }
}

BilevelInstance draw(Draw& next, const GeneratorParams& params) {
  const Index n = params.n, m = params.m;
  BilevelInstance inst;
  inst.n = n;
  inst.m = m;
  inst.c = next.vector(n);
  inst.d = next.vector(m);
  inst.f = next.vector(m);
  inst.G = next.matrix(params.p, n);
  inst.g = next.vector(params.p);
  inst.A = next.matrix(params.k, n);
  inst.B = next.matrix(params.k, m);
  inst.a = next.vector(params.k);
  inst.C = next.matrix(params.l, n);
  inst.D = next.matrix(params.l, m);
  inst.b = next.vector(params.l);

  append_box(inst.G, inst.g, n, rat(params.range * n));
  append_box(inst.D, inst.b, m, rat(params.range * m));
  inst.C.conservativeResize(inst.D.rows(), n);
  inst.C.bottomRows(2 * m).setZero();
  return inst;
}

}  // namespace

BilevelInstance generate_instance(const GeneratorParams& params) {
  if (params.n < 0 || params.m < 0 || params.k < 0 || params.l < 0 || params.p < 0)
    throw ValidationError("generator: dimension counts must be nonnegative");
  if (params.range < 1) throw ValidationError("generator: range must be at least 1");
  Draw next(params.seed, params.range);
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    BilevelInstance inst = draw(next, params);
    if (!params.require_solvable) return inst;
    try {
      solve_bilevel_bruteforce(inst);
      return inst;
    } catch (const InfeasibleError&) {
    }
  }
  throw LimitError("generator: no solvable instance within " + std::to_string(params.max_attempts) + " draws");
}

}  // namespace blvl
