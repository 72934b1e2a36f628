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


#include "blvl/cli.hpp"

#include "blvl/errors.hpp"
#include "blvl/generator.hpp"
#include "blvl/oracle.hpp"
#include "blvl/transform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace blvl {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
  if (!file) throw ParseError("cannot write " + path);
}

struct Args {
  std::string input, output, stage, method = "oracle", kappa, solution;
  std::string from, to, step;
  Index axis = 0;
  GeneratorParams gen;
};

int cmd_transform(const Args& args, std::ostream& out) {
  const BilevelInstance inst = parse_instance(read_file(args.input));
  const LiftedInstance lifted = lift_coupling(inst);
  std::string text;
  if (args.stage == "lift") {
    text = serialize_instance(lifted.as_instance());
  } else {
    const ComplementaritySystem sys = kkt_reformulate(lifted);
    if (args.stage == "kkt") {
      text = serialize_system(sys);
    } else if (args.stage == "milp") {
      const Rat M = bound_big_m(lifted);
      text = serialize_milp(linearize_big_m(sys, M), M, std::nullopt);
    } else {
      if (args.kappa.empty()) throw ValidationError("stage penalty requires --kappa");
      const Rat kappa = parse_rat(args.kappa);
      const Rat M = bound_big_m(lifted);
      text = serialize_milp(penalize(sys, M, kappa), M, kappa);
    }
  }
  write_output(args.output, text, out);
  return kExitOk;
}

int cmd_solve(const Args& args, std::ostream& out) {
  const BilevelInstance inst = parse_instance(read_file(args.input));
  BilevelSolution sol;
  switch (parse_method(args.method)) {
    case Method::Oracle:
      sol = solve_bilevel_bruteforce(inst);
      break;
    case Method::KktMilp:
      sol = solve_kkt(inst);
      break;
    case Method::Penalty:
      if (args.kappa.empty() || args.kappa == "auto")
        sol = auto_kappa(inst).solution;
      else
        sol = solve_penalty(inst, parse_rat(args.kappa));
      break;
  }
  out << serialize_solution(sol);
  return kExitOk;
}

int cmd_sample(const Args& args, std::ostream& out) {
  const BilevelInstance inst = parse_instance(read_file(args.input));
  if (args.axis < 0 || args.axis >= inst.n) throw ValidationError("axis out of range");
  const SampleReport report =
      sample_induced_set(inst, args.axis, parse_rat(args.from), parse_rat(args.to), parse_rat(args.step));
  write_output(args.output, format_samples(report), out);
  return kExitOk;
}

int cmd_generate(const Args& args, std::ostream& out) {
  write_output(args.output, serialize_instance(generate_instance(args.gen)), out);
  return kExitOk;
}

int cmd_verify(const Args& args, std::ostream& out) {
  const BilevelInstance inst = parse_instance(read_file(args.input));
  const BilevelSolution sol = parse_solution(read_file(args.solution));
  if (sol.x.size() != inst.n || sol.y.size() != inst.m)
    throw ValidationError("solution dimensions do not match the instance");
  FeasibilityReport report = check_bilevel_feasible(inst, sol.x, sol.y);
  const Rat recomputed = recompute_objective(inst, sol);
  if (recomputed != sol.objective)
    report.violations.push_back({"objective mismatch: recorded " + to_string(sol.objective) + ", recomputed " +
                                     to_string(recomputed),
                                 abs(recomputed - sol.objective)});
  if (report.feasible()) {
    out << "ok: bilevel feasible, objective " << to_string(recomputed) << "\n";
    return kExitOk;
  }
  out << report.describe();
  return kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for linear bilevel problems with coupling constraints", "blvl"};
  app.require_subcommand(1);
  Args args;

  auto* transform = app.add_subcommand("transform", "Write the lifted, KKT, big-M MILP or penalized model");
  transform->add_option("--stage", args.stage, "lift, kkt, milp or penalty")
      ->required()
      ->check(CLI::IsMember({"lift", "kkt", "milp", "penalty"}));
  transform->add_option("--kappa", args.kappa, "Penalty weight (rational)");
  transform->add_option("-i,--input", args.input)->required();
  transform->add_option("-o,--output", args.output);

  auto* solve = app.add_subcommand("solve", "Solve an instance and print the solution record");
  solve->add_option("--method", args.method, "oracle, kkt or penalty")
      ->check(CLI::IsMember({"oracle", "kkt", "kkt-milp", "penalty"}));
  solve->add_option("--kappa", args.kappa, "auto or a rational weight");
  solve->add_option("-i,--input", args.input)->required();

  auto* sample = app.add_subcommand("sample", "Sample the induced set along one leader axis");
  sample->add_option("--axis", args.axis);
  sample->add_option("--from", args.from)->required();
  sample->add_option("--to", args.to)->required();
  sample->add_option("--step", args.step)->required();
  sample->add_option("-i,--input", args.input)->required();
  sample->add_option("-o,--output", args.output);

  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--n", args.gen.n);
  generate->add_option("--m", args.gen.m);
  generate->add_option("--k", args.gen.k);
  generate->add_option("--l", args.gen.l);
  generate->add_option("--p", args.gen.p);
  generate->add_option("--range", args.gen.range);
  generate->add_option("--seed", args.gen.seed);
  generate->add_flag("--solvable", args.gen.require_solvable);
  generate->add_option("-o,--output", args.output);

  auto* verify = app.add_subcommand("verify", "Check a solution record against an instance");
  verify->add_option("-i,--input", args.input)->required();
  verify->add_option("--solution", args.solution)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform) return cmd_transform(args, out);
    if (*solve) return cmd_solve(args, out);
    if (*sample) return cmd_sample(args, out);
    if (*generate) return cmd_generate(args, out);
    return cmd_verify(args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnboundedPolyhedronError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnboundedPolyhedron;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const UnboundedError& e) {
    err << "unbounded: " << e.what() << "\n";
    return kExitUnbounded;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace blvl
