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

#include "blvl/generator.hpp"
#include "blvl/model.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace blvl::testing {

inline std::string data_path(const std::string& name) { return std::string(BLVL_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline BilevelInstance load(const std::string& name) { return parse_instance(read_text(data_path(name))); }

/// Shape and seed of corpus instance i: n, m in [1, 3], k in [0, 3],
/// l in [1, 3], p in {0, 1}.
inline GeneratorParams corpus_params(int i) {
  GeneratorParams params;
  params.n = 1 + i % 3;
  params.m = 1 + (i / 3) % 3;
  params.k = (i + i / 9) % 4;
  params.l = 1 + (i / 2) % 3;
  params.p = (i / 4) % 2;
  params.range = 4;
  params.seed = 20260000 + static_cast<std::uint64_t>(i);
  params.require_solvable = true;
  return params;
}

inline BilevelInstance corpus_instance(int i) { return generate_instance(corpus_params(i)); }

}  // namespace blvl::testing
