#include "dedp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dedp/dtw.hpp"
#include "dedp/kernel.hpp"
#include "dedp/reductions.hpp"
#include "dedp/solve.hpp"
#include "dedp/transform.hpp"

namespace dedp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kFormat = 3;
constexpr int kResource = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("NO_FILE", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("NO_FILE", "cannot write '" + path + "'");
  out << content;
}

struct SolveOpts {
  std::string algo, in, out;
  std::uint64_t limit = OracleLimits{}.max_paths_per_request;
};

int cmd_solve(const SolveOpts& opt, std::ostream& out) {
  Instance inst = parse_instance(slurp(opt.in));
  std::optional<Solution> sol;
  if (opt.algo == "oracle") {
    OracleLimits limits;
    limits.max_paths_per_request = opt.limit;
    sol = oracle(inst, limits);
  } else if (opt.algo == "xp") {
    sol = solve_xp(inst);
  } else {
    KernelResult kr = kernelize(inst);
    switch (kr.kind) {
      case KernelResult::Kind::Solved:
        sol = std::move(kr.solution);
        break;
      case KernelResult::Kind::NoSolution:
        break;
      case KernelResult::Kind::Reduced: {
        if (auto reduced_sol = solve_xp(*kr.reduced)) {
          for (Path& p : reduced_sol->paths) p = lift_path(*kr.trace, p);
          sol = std::move(reduced_sol);
        }
        break;
      }
    }
  }
  if (sol) {
    VerifyResult vr = verify_solution(inst, *sol);
    if (!vr) {
      out << "no\n";  // never expected; fail loudly rather than emit garbage
      out << "internal verification failure: " << vr.message << '\n';
      return kNegative;
    }
  }
  out << (sol ? "yes" : "no") << '\n';
  if (!opt.out.empty()) spit(opt.out, sol ? write_solution(*sol) : write_negative_solution());
  return sol ? kOk : kNegative;
}

int cmd_kernelize(const std::string& in, const std::string& out_path, const std::string& trace_path,
                  std::ostream& out) {
  Instance inst = parse_instance(slurp(in));
  KernelResult kr = kernelize(inst);
  switch (kr.kind) {
    case KernelResult::Kind::Solved:
      out << "solved\n";
      if (!out_path.empty()) spit(out_path, write_solution(*kr.solution));
      if (!trace_path.empty()) spit(trace_path, "# bypassed:\n");
      return kOk;
    case KernelResult::Kind::Reduced: {
      out << "reduced\n";
      if (!out_path.empty()) {
        Compacted c = compact(*kr.reduced);
        std::ostringstream file;
        for (size_t i = 1; i < c.old_id.size(); ++i)
          if (c.old_id[i] != static_cast<int>(i)) file << "# map " << i << ' ' << c.old_id[i] << '\n';
        file << write_instance(c.instance);
        spit(out_path, file.str());
      }
      if (!trace_path.empty()) spit(trace_path, write_trace(*kr.trace));
      return kOk;
    }
    case KernelResult::Kind::NoSolution:
      out << "no\n";
      if (!out_path.empty()) spit(out_path, write_negative_solution());
      return kNegative;
  }
  return kNegative;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               std::ostream& out) {
  Instance inst = parse_instance(slurp(instance_path));
  std::optional<Solution> sol = parse_solution(slurp(solution_path));
  if (!sol) {
    out << "solution file is negative\n";
    return kNegative;
  }
  VerifyResult vr = verify_solution(inst, *sol);
  if (vr) {
    out << "ok\n";
    return kOk;
  }
  out << vr.message << '\n';
  return kNegative;
}

int cmd_check_decomp(const std::string& graph_path, const std::string& decomp_path,
                     std::ostream& out) {
  Instance inst = parse_instance(slurp(graph_path));
  ArborealDecomposition dec = parse_decomposition(slurp(decomp_path));
  DecompositionReport rep = validate_decomposition(inst.graph, dec);
  if (rep.ok) {
    out << "width " << rep.width << '\n';
    return kOk;
  }
  out << "violation: " << rep.violation << '\n';
  return kNegative;
}

int cmd_stats(const std::string& in, std::ostream& out) {
  Instance inst = parse_instance(slurp(in));
  out << "n " << inst.graph.vertex_count() << '\n';
  out << "m " << inst.graph.edge_count() << '\n';
  out << "k " << inst.k() << '\n';
  out << "d " << inst.d << '\n';
  out << "s " << inst.s << '\n';
  out << "nonterminals " << nonterminals(inst).size() << '\n';
  out << "blocking " << blocking_vertices(inst.graph, inst.requests, inst.s).size() << '\n';
  if (inst.k() >= 1 && inst.s < inst.k())
    out << "kernel_bound " << kernel_bound(inst.k(), inst.d, inst.s) << '\n';
  else
    out << "kernel_bound -\n";
  switch (trivial_status(inst)) {
    case TrivialStatus::PositiveTrivial: out << "trivial positive\n"; break;
    case TrivialStatus::NegativeTrivial: out << "trivial negative\n"; break;
    case TrivialStatus::Undecided: out << "trivial undecided\n"; break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint-enough directed path solver toolkit"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  CLI::App* solve_cmd = app.add_subcommand("solve", "decide an instance");
  solve_cmd->add_option("--algo", solve_opts.algo, "oracle, xp, or kernel")
      ->required()
      ->check(CLI::IsMember({"oracle", "xp", "kernel"}));
  solve_cmd->add_option("--in", solve_opts.in, "instance file")->required();
  solve_cmd->add_option("--out", solve_opts.out, "solution file to write");
  solve_cmd->add_option("--limit", solve_opts.limit, "oracle path cap per request");

  std::string kz_in, kz_out, kz_trace;
  CLI::App* kz_cmd = app.add_subcommand("kernelize", "solve or shrink an instance");
  kz_cmd->add_option("--in", kz_in)->required();
  kz_cmd->add_option("--out", kz_out, "solution or reduced instance file");
  kz_cmd->add_option("--trace", kz_trace, "bypass trace dump");

  std::string vf_instance, vf_solution;
  CLI::App* vf_cmd = app.add_subcommand("verify", "check a solution file");
  vf_cmd->add_option("--instance", vf_instance)->required();
  vf_cmd->add_option("--solution", vf_solution)->required();

  std::string gen_kind, gen_in, gen_out;
  int gen_n = 8, gen_m = 12, gen_k = 2, gen_d = 1, gen_s = 1, gen_index = 1, gen_starget = 1;
  double gen_alpha = 0.75;
  std::uint64_t gen_seed = 0;
  bool gen_acyclic = false, gen_connected = false, gen_clean = false, seed_given = false;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--kind", gen_kind)->required()
      ->check(CLI::IsMember({"random", "ddpc", "indset", "amplify"}));
  gen_cmd->add_option("--out", gen_out)->required();
  gen_cmd->add_option("--in", gen_in, "source file for ddpc/indset/amplify");
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--m", gen_m);
  gen_cmd->add_option("--k", gen_k);
  gen_cmd->add_option("--d", gen_d);
  gen_cmd->add_option("--s", gen_s);
  gen_cmd->add_option("--seed", gen_seed)->each([&](const std::string&) { seed_given = true; });
  gen_cmd->add_flag("--acyclic", gen_acyclic);
  gen_cmd->add_flag("--ensure-connected", gen_connected);
  gen_cmd->add_flag("--ensure-clean", gen_clean);
  gen_cmd->add_option("--alpha", gen_alpha, "chain scaling for ddpc");
  gen_cmd->add_option("--index", gen_index, "request index for ddpc");
  gen_cmd->add_option("--s-target", gen_starget, "congestion for amplify");

  std::string cd_graph, cd_decomp;
  CLI::App* cd_cmd = app.add_subcommand("check-decomp", "validate a decomposition");
  cd_cmd->add_option("--graph", cd_graph)->required();
  cd_cmd->add_option("--decomp", cd_decomp)->required();

  std::string st_in;
  CLI::App* st_cmd = app.add_subcommand("stats", "print instance statistics");
  st_cmd->add_option("--in", st_in)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 convention
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_opts, out);
    if (kz_cmd->parsed()) return cmd_kernelize(kz_in, kz_out, kz_trace, out);
    if (vf_cmd->parsed()) return cmd_verify(vf_instance, vf_solution, out);
    if (cd_cmd->parsed()) return cmd_check_decomp(cd_graph, cd_decomp, out);
    if (st_cmd->parsed()) return cmd_stats(st_in, out);
    if (gen_cmd->parsed()) {
      Instance inst;
      if (gen_kind == "random") {
        if (!seed_given) {
          err << "gen random requires --seed\n";
          return kUsage;
        }
        inst = random_instance(gen_n, gen_m, gen_k, gen_d, gen_s, gen_seed,
                               RandomFlags{gen_acyclic, gen_connected, gen_clean});
      } else if (gen_kind == "ddpc") {
        if (gen_in.empty()) {
          err << "gen ddpc requires --in\n";
          return kUsage;
        }
        inst = from_ddpc(parse_ddpc(slurp(gen_in)), gen_alpha, gen_index);
      } else if (gen_kind == "indset") {
        if (gen_in.empty()) {
          err << "gen indset requires --in\n";
          return kUsage;
        }
        inst = from_independent_set(parse_undirected(slurp(gen_in)), gen_d, gen_s);
      } else {  // amplify
        if (gen_in.empty()) {
          err << "gen amplify requires --in\n";
          return kUsage;
        }
        inst = amplify(parse_instance(slurp(gen_in)), gen_starget);
      }
      spit(gen_out, write_instance(inst));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kFormat;
  } catch (const ResourceLimitError& e) {
    err << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "no subcommand\n";
  return kUsage;
}

}  // namespace dedp::cli
