// Copyright 2026 The hystcon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, gen, verify.
//
// Exit status: 0 YES / valid, 1 NO / invalid, 2 usage or input error,
// 3 internal error or oracle disagreement.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hystcon/hystcon.hpp"
#include "hystcon/instance_io.hpp"

namespace {

using namespace hystcon;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

class Disagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string with_file(const std::string& path, const std::string& msg) { return path + ":" + msg; }

InstanceFile load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const UnsupportedInstance&) {
    throw;
  } catch (const UsageError& e) {
    throw UsageError(with_file(path, e.what()));
  }
}

std::vector<Permutation> perm_path(const Permutation& pi, const ExchangeSequence& seq) {
  std::vector<Permutation> out{pi};
  out.insert(out.end(), seq.intermediates.begin(), seq.intermediates.end());
  return out;
}

struct SolveOptions {
  std::string file;
  std::string mode = "search";
  bool oracle = false;
  bool json = false;
};

void print_solution(const SolutionFile& sol, bool json) {
  if (json) {
    std::cout << solution_to_json(sol).dump() << "\n";
    return;
  }
  if (!sol.yes) {
    std::cout << "NO\n";
    return;
  }
  std::cout << "YES\n";
  if (sol.kind == InstanceKind::hystcon) {
    for (const auto& v : sol.sets) std::cout << to_string(v) << "\n";
    return;
  }
  for (std::size_t i = 0; i < sol.perms.size(); ++i) {
    std::cout << to_string(sol.perms[i]);
    if (i < sol.swaps.size()) {
      std::cout << "   swap (" << sol.swaps[i].first << "," << sol.swaps[i].second << ")";
    }
    std::cout << "\n";
  }
}

int cmd_solve(const SolveOptions& opt) {
  const InstanceFile inst = load_instance(opt.file);
  const Mode mode = opt.mode == "decision" ? Mode::decision : Mode::search;
  SolutionFile sol;
  sol.kind = inst.kind;
  if (inst.kind == InstanceKind::hystcon) {
    const SolveOutcome res = solve(inst.hystcon, mode);
    sol.yes = res.yes;
    sol.sets = res.path;
    if (opt.oracle) {
      const auto ref = oracle_hystcon_bfs(inst.hystcon);
      if (ref.reachable != res.yes) {
        throw Disagreement(std::string("oracle disagreement: solver says ") +
                           (res.yes ? "YES" : "NO") + ", oracle says " +
                           (ref.reachable ? "YES" : "NO"));
      }
      if (res.yes && mode == Mode::search && !validate_path(res.path, inst.hystcon)) {
        throw Disagreement("solver path failed validation");
      }
      std::cerr << "oracle agrees\n";
    }
  } else {
    const auto& s = inst.sort;
    if (mode == Mode::search) {
      const auto seq = sort_guided(s);
      sol.yes = seq.has_value();
      if (seq) {
        sol.perms = perm_path(s.pi, *seq);
        sol.swaps = seq->swaps;
      }
    } else {
      const bool pi_banned = std::find(s.forbidden.begin(), s.forbidden.end(), s.pi) != s.forbidden.end();
      const Reduction red = reduce_to_hystcon(s);
      const bool within = !s.k_bound || *s.k_bound >= red.positions.size();
      sol.yes = !pi_banned && within && solve(red.instance, Mode::decision).yes;
    }
    if (opt.oracle) {
      const auto ref = oracle_guided_sorting_bfs(s);
      if (ref.reachable != sol.yes) {
        throw Disagreement(std::string("oracle disagreement: solver says ") +
                           (sol.yes ? "YES" : "NO") + ", oracle says " +
                           (ref.reachable ? "YES" : "NO"));
      }
      if (sol.yes && mode == Mode::search && !validate_path(sol.perms, s)) {
        throw Disagreement("solver sequence failed validation");
      }
      std::cerr << "oracle agrees\n";
    }
  }
  print_solution(sol, opt.json);
  return sol.yes ? kExitYes : kExitNo;
}

struct GenOptions {
  std::size_t n = 10;
  std::optional<std::size_t> d;
  double density = 1.0;
  std::uint64_t seed = 1;
  std::string kind = "hystcon";
  std::optional<std::size_t> max_forbidden;
};

int cmd_gen(const GenOptions& opt) {
  Rng rng(opt.seed);
  InstanceFile out;
  if (opt.density < 0 || !std::isfinite(opt.density)) throw UsageError("--density must be >= 0");
  if (opt.kind == "hystcon") {
    if (opt.n == 0) throw UsageError("--n must be at least 1");
    const std::size_t d = opt.d.value_or(opt.n);
    if (d > opt.n) throw UsageError("--d must not exceed --n");
    auto count = static_cast<std::size_t>(
        std::llround(opt.density * static_cast<double>(d) * static_cast<double>(opt.n)));
    if (opt.max_forbidden) count = std::min(count, *opt.max_forbidden);
    out.kind = InstanceKind::hystcon;
    out.hystcon = random_hystcon(opt.n, d, count, rng);
  } else {
    if (opt.d) throw UsageError("--d applies to --kind hystcon only");
    if (opt.n > 62) throw UsageError("--n must be at most 62 for --kind sort");
    out.kind = InstanceKind::sort;
    out.sort.pi = random_involution(opt.n, rng);
    const std::size_t c = cycle_decomposition(out.sort.pi).nontrivial().size();
    const double relevant = std::ldexp(1.0, static_cast<int>(c)) - 1;
    auto bound = static_cast<std::size_t>(std::llround(std::min(relevant, opt.density * relevant)));
    if (opt.max_forbidden) bound = std::min(bound, *opt.max_forbidden);
    out.sort.forbidden = random_relevant_involutions(out.sort.pi, bound, rng);
    out.sort.ops = OpModel::exchange;
  }
  std::cout << serialize_instance(out);
  return kExitYes;
}

bool no_path_exists(const InstanceFile& inst) {
  bool solver_no = true;
  std::optional<bool> oracle_no;
  if (inst.kind == InstanceKind::hystcon) {
    solver_no = !solve(inst.hystcon, Mode::decision).yes;
    try {
      oracle_no = !oracle_hystcon_bfs(inst.hystcon).reachable;
    } catch (const OracleCapExceeded&) {
    }
  } else {
    try {
      solver_no = !sort_guided(inst.sort).has_value();
    } catch (const UnsupportedInstance&) {
      // Shapes the reduction cannot handle are checked by the oracle alone.
      solver_no = !oracle_guided_sorting_bfs(inst.sort).reachable;
    }
    try {
      oracle_no = !oracle_guided_sorting_bfs(inst.sort).reachable;
    } catch (const OracleCapExceeded&) {
    }
  }
  if (oracle_no && *oracle_no != solver_no) throw Disagreement("oracle disagreement on NO claim");
  return solver_no;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
  const InstanceFile inst = load_instance(instance_path);
  SolutionFile sol;
  try {
    sol = parse_solution(read_file(solution_path), inst);
  } catch (const UsageError& e) {
    throw UsageError(with_file(solution_path, e.what()));
  }
  const Json raw = Json::parse(read_file(solution_path));
  if (!sol.yes) {
    const bool ok = no_path_exists(inst);
    std::cout << (ok ? "valid: no solution exists\n" : "invalid: a solution exists\n");
    return ok ? kExitYes : kExitNo;
  }
  std::string reason;
  std::size_t length = 0;
  if (inst.kind == InstanceKind::hystcon) {
    length = sol.sets.empty() ? 0 : sol.sets.size() - 1;
    if (!validate_path(sol.sets, inst.hystcon)) reason = "path is not a valid avoiding path";
  } else {
    length = sol.perms.empty() ? 0 : sol.perms.size() - 1;
    if (!validate_path(sol.perms, inst.sort)) {
      reason = "sequence is not an optimal avoiding sorting sequence";
    } else if (inst.sort.k_bound && length > *inst.sort.k_bound) {
      reason = "sequence is longer than k_bound";
    } else if (raw.contains("swaps")) {
      if (sol.swaps.size() != length) reason = "swap count differs from path length";
      for (std::size_t i = 0; reason.empty() && i < sol.swaps.size(); ++i) {
        const auto [a, b] = sol.swaps[i];
        if (a >= b || b > inst.sort.pi.size() ||
            !(apply_exchange(sol.perms[i], a, b) == sol.perms[i + 1])) {
          reason = "swap " + std::to_string(i + 1) + " does not match the path";
        }
      }
    }
  }
  if (reason.empty() && raw.contains("length") && !raw["length"].is_null()) {
    if (!raw["length"].is_number_integer() || raw["length"].get<long long>() != static_cast<long long>(length)) {
      reason = "declared length differs from path length";
    }
  }
  if (!reason.empty()) {
    std::cout << "invalid: " << reason << "\n";
    return kExitNo;
  }
  std::cout << "valid\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden-vertex hypercube connectivity and guided sorting"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("file", solve_opt.file, "Instance JSON file")->required();
  solve_cmd->add_option("--mode", solve_opt.mode, "decision or search")
      ->check(CLI::IsMember({"decision", "search"}));
  solve_cmd->add_flag("--oracle", solve_opt.oracle, "Cross-check with the brute-force oracle");
  solve_cmd->add_flag("--json", solve_opt.json, "Print a JSON solution");

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "Print a seeded random instance");
  gen_cmd->add_option("--n", gen_opt.n, "Ground set size (hystcon) or permutation size (sort)");
  gen_cmd->add_option("--d", gen_opt.d, "Distance |T|-|S| (hystcon, default n)");
  gen_cmd->add_option("--density", gen_opt.density,
                      "hystcon: |F| = round(density*d*n); sort: fraction of relevant involutions");
  gen_cmd->add_option("--seed", gen_opt.seed, "Random seed");
  gen_cmd->add_option("--kind", gen_opt.kind, "hystcon or sort")
      ->check(CLI::IsMember({"hystcon", "sort"}));
  gen_cmd->add_option("--max-forbidden", gen_opt.max_forbidden, "Upper bound on |F|");

  std::string verify_instance;
  std::string verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance JSON file")->required();
  verify_cmd->add_option("solution", verify_solution, "Solution JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_opt);
    if (*gen_cmd) return cmd_gen(gen_opt);
    if (*verify_cmd) return cmd_verify(verify_instance, verify_solution);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Disagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
