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

#include <iosfwd>

namespace blvl {

/// Exit codes of the `blvl` driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitUnboundedPolyhedron = 3,
  kExitInfeasible = 4,
  kExitUnbounded = 5,
  kExitInternal = 6,
};

/// Runs the command line `argv`; diagnostics go to `err`, solutions and
/// reports to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blvl
