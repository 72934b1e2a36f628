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


// Deterministic random instances with integer data. Box rows on x (in X)
// and on y (in the lower level) keep the combined polyhedron bounded.

#pragma once

#include "blvl/model.hpp"

#include <cstdint>

namespace blvl {

struct GeneratorParams {
  Index n = 1, m = 1, k = 1, l = 1, p = 0;
  long range = 4;
  std::uint64_t seed = 0;
  bool require_solvable = false;
  int max_attempts = 1000;
};

/// Coefficients uniform in [-range, range], then the box rows
/// -range n <= x_i <= range n appended to X and -range m <= y_j <= range m
/// appended to the lower level. With require_solvable, draws again until
/// the brute-force oracle finds an optimum; throws LimitError after
/// max_attempts draws.
BilevelInstance generate_instance(const GeneratorParams& params);

}  // namespace blvl
