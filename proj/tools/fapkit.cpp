// fapkit: solve / verify / generate FAP instances from the command line.
//
// Exit codes: 0 success (check-dual: feasible), 1 infeasible dual,
// 2 malformed input or bad parameters, 3 infeasible instance, 4 instance too
// large for the requested oracle, 5 trace mismatch.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "fap/batch.hpp"
#include "fap/blocks.hpp"
#include "fap/dual.hpp"
#include "fap/generators.hpp"
#include "fap/oracle.hpp"
#include "fap/solver.hpp"
#include "fap/trace.hpp"

namespace {

int exit_code_for(fap::ErrorKind kind) {
  using EK = fap::ErrorKind;
  switch (kind) {
    case EK::MalformedLine:
    case EK::DuplicateEdge:
    case EK::SelfLoop:
    case EK::ZeroEdgesNotForest:
    case EK::NonContiguousIds:
    case EK::MalformedSet:
    case EK::ParamsInvalid:
      return 2;
    case EK::DisconnectedInput:
    case EK::BridgeInInput:
    case EK::InfeasibleInput:
    case EK::Infeasible:
    case EK::PreconditionUnmet:
      return 3;
    case EK::TooLarge:
      return 4;
    case EK::TraceMismatch:
      return 5;
  }
  return 1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fap::FapError(fap::ErrorKind::MalformedLine, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& payload, const std::string& out_path) {
  std::cout << payload;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out)
      throw fap::FapError(fap::ErrorKind::MalformedLine, "cannot write " + out_path);
    out << payload;
  }
}

std::string ratio_exact(int num, int den) {
  int g = std::gcd(num, den);
  if (g == 0) g = 1;
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

std::string ratio_decimal(int num, int den) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", static_cast<double>(num) / den);
  return buf;
}

std::string solve_payload(const fap::Instance& inst, fap::Mode mode,
                          const fap::Solution& sol, const fap::RunReport& rep) {
  (void)inst;
  std::ostringstream out;
  out << "mode=" << fap::mode_name(mode) << '\n';
  out << "cost=" << sol.cost() << '\n';
  out << "edges=";
  bool first = true;
  for (int id : sol.edge_ids()) {
    if (!first) out << ' ';
    out << id;
    first = false;
  }
  out << '\n';
  const fap::SegmentCensus& c = rep.census;
  out << "census total=" << c.total << " strong=" << c.strong << " weak=" << c.weak
      << " special=" << c.special << " trivial=" << c.trivial << " closed=" << c.closed
      << '\n';
  out << "step1_cost=" << rep.step1_cost << '\n';
  out << "pushes=" << rep.pushes << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forest augmentation solver and experiment kit"};
  app.require_subcommand(1);

  std::string mode_str = "2vc";
  std::string out_path, trace_path;
  uint64_t seed = 0;
  int trials = 0;
  int threads = 0;

  auto add_common = [&](CLI::App* cmd, bool with_trace) {
    cmd->add_option("--mode", mode_str, "2ec or 2vc")->check(CLI::IsMember({"2ec", "2vc"}));
    cmd->add_option("--out", out_path, "also write the output to this file");
    if (with_trace) cmd->add_option("--trace", trace_path, "write the run trace here");
  };

  std::string instance_path, second_path;

  CLI::App* c_solve = app.add_subcommand("solve", "run the two-pass solver");
  c_solve->add_option("instance", instance_path, "instance file")->required();
  add_common(c_solve, true);

  CLI::App* c_oracle = app.add_subcommand("oracle", "exact optimum");
  std::string method = "bnb";
  c_oracle->add_option("instance", instance_path, "instance file")->required();
  c_oracle->add_option("--method", method, "exhaustive or bnb")
      ->check(CLI::IsMember({"exhaustive", "bnb"}));
  add_common(c_oracle, false);

  CLI::App* c_compare = app.add_subcommand("compare", "solver vs exact optimum");
  c_compare->add_option("instance", instance_path, "instance file")->required();
  add_common(c_compare, false);

  CLI::App* c_gen = app.add_subcommand("gen", "generate an instance");
  std::string family;
  int k = 0, gen_n = 0, gen_extra = 0;
  double zero_fraction = 0.0;
  c_gen->add_option("--family", family, "cycle, theta, wheel, tap_path, map_matching");
  c_gen->add_option("--k", k, "family size parameter");
  c_gen->add_option("--n", gen_n, "random instance vertex count");
  c_gen->add_option("--extra", gen_extra, "random chords beyond the base cycle");
  c_gen->add_option("--zero-fraction", zero_fraction, "target share of zero-cost edges");
  c_gen->add_option("--seed", seed, "generator seed");
  add_common(c_gen, false);

  CLI::App* c_batch = app.add_subcommand("batch", "compare many instances");
  std::string manifest_path;
  c_batch->add_option("manifest", manifest_path, "manifest file");
  c_batch->add_option("--trials", trials, "seeded-search trial count (alternative to a manifest)");
  c_batch->add_option("--n", gen_n, "search instance vertex count");
  c_batch->add_option("--extra", gen_extra, "search chords beyond the base cycle");
  c_batch->add_option("--zero-fraction", zero_fraction, "search zero-cost share");
  c_batch->add_option("--seed", seed, "search base seed");
  c_batch->add_option("--threads", threads, "worker count (default: all, 1 = serial)");
  add_common(c_batch, false);

  CLI::App* c_check = app.add_subcommand("check-dual", "verify a dual assignment");
  c_check->add_option("instance", instance_path, "instance file")->required();
  c_check->add_option("dual", second_path, "dual assignment file")->required();
  add_common(c_check, false);

  CLI::App* c_replay = app.add_subcommand("replay", "re-run a recorded trace");
  c_replay->add_option("instance", instance_path, "instance file")->required();
  c_replay->add_option("trace", second_path, "trace file")->required();
  add_common(c_replay, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    fap::Mode mode = fap::parse_mode(mode_str);

    if (c_solve->parsed()) {
      fap::Instance inst = fap::parse_instance(slurp(instance_path));
      auto [sol, rep] = fap::solve(inst, mode);
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        if (!tf)
          throw fap::FapError(fap::ErrorKind::MalformedLine, "cannot write " + trace_path);
        tf << fap::serialize_trace(inst, rep, sol);
      }
      emit(solve_payload(inst, mode, sol, rep), out_path);
      return 0;
    }

    if (c_oracle->parsed()) {
      fap::Instance inst = fap::parse_instance(slurp(instance_path));
      fap::OptResult r = method == "exhaustive" ? fap::opt_exhaustive(inst, mode)
                                                : fap::opt_bnb(inst, mode);
      std::ostringstream out;
      out << "mode=" << fap::mode_name(mode) << '\n';
      out << "opt_cost=" << r.opt_cost << '\n';
      out << "witness=";
      bool first = true;
      for (int id : r.witness.edge_ids()) {
        if (!first) out << ' ';
        out << id;
        first = false;
      }
      out << '\n';
      out << "explored=" << r.explored << '\n';
      out << "method=" << (r.method == fap::OracleMethod::Exhaustive ? "exhaustive" : "bnb")
          << '\n';
      emit(out.str(), out_path);
      return 0;
    }

    if (c_compare->parsed()) {
      fap::Instance inst = fap::parse_instance(slurp(instance_path));
      auto [sol, rep] = fap::solve(inst, mode);
      (void)rep;
      fap::OptResult r = fap::opt_bnb(inst, mode);
      std::ostringstream out;
      out << "file,n,m,m0,alg_cost,opt_cost,ratio_exact,ratio,mode\n";
      out << instance_path << ',' << inst.n() << ',' << inst.m() << ','
          << inst.zero_edge_count() << ',' << sol.cost() << ',' << r.opt_cost << ','
          << ratio_exact(sol.cost(), r.opt_cost) << ','
          << ratio_decimal(sol.cost(), r.opt_cost) << ',' << fap::mode_name(mode) << '\n';
      emit(out.str(), out_path);
      return 0;
    }

    if (c_gen->parsed()) {
      fap::Instance inst = [&] {
        if (!family.empty()) return fap::gen_family(fap::parse_family(family), k);
        fap::GenParams p;
        p.n = gen_n;
        p.extra_edges = gen_extra;
        p.zero_fraction = zero_fraction;
        p.seed = seed;
        return fap::gen_random(p);
      }();
      emit(fap::serialize_instance(inst), out_path);
      return 0;
    }

    if (c_batch->parsed()) {
      std::vector<fap::TrialRow> rows;
      std::string csv;
      if (trials > 0) {
        fap::GenParams p;
        p.n = gen_n;
        p.extra_edges = gen_extra;
        p.zero_fraction = zero_fraction;
        p.seed = seed;
        p.mode = mode;
        fap::SearchResult res = fap::worst_case_search(p, trials, threads);
        const fap::TrialRow& w = res.rows[res.best_index];
        std::cerr << "worst trial=" << res.best_index << " seed=" << w.seed << " ratio="
                  << ratio_exact(w.alg_cost, w.opt_cost) << " ("
                  << ratio_decimal(w.alg_cost, w.opt_cost) << ")\n";
        csv = fap::search_csv(res);
      } else {
        if (manifest_path.empty())
          throw fap::FapError(fap::ErrorKind::ParamsInvalid,
                              "batch needs a manifest or --trials");
        auto manifest = fap::parse_manifest(slurp(manifest_path));
        rows = fap::run_batch(manifest, mode, threads);
        csv = fap::batch_csv(rows);
      }
      emit(csv, out_path);
      return 0;
    }

    if (c_check->parsed()) {
      fap::Instance inst = fap::parse_instance(slurp(instance_path));
      fap::DualSolution d = fap::parse_dual(inst, slurp(second_path));
      auto [ok, violations] = fap::check_feasible(inst, d);
      std::ostringstream out;
      for (const fap::DualViolation& v : violations) {
        const fap::Edge& e = inst.edge(v.edge);
        out << "violation edge=" << v.edge << " u=" << e.u << " v=" << e.v
            << " lhs=" << fap::format_rat(v.lhs) << " rhs=" << fap::format_rat(v.rhs)
            << '\n';
      }
      out << "feasible=" << (ok ? 1 : 0) << '\n';
      out << "objective=" << fap::format_rat(fap::objective(d)) << '\n';
      out << "violations=" << violations.size() << '\n';
      emit(out.str(), out_path);
      return ok ? 0 : 1;
    }

    if (c_replay->parsed()) {
      fap::Instance inst = fap::parse_instance(slurp(instance_path));
      fap::replay_trace(inst, slurp(second_path));
      emit("replay=ok\n", out_path);
      return 0;
    }
  } catch (const fap::FapError& e) {
    std::cerr << "error: " << e.what() << " [" << fap::error_kind_name(e.kind) << "]\n";
    return exit_code_for(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
