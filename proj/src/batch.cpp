#include "fap/batch.hpp"

#include <cstdio>
#include <sstream>

#include "fap/oracle.hpp"
#include "fap/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fap {

std::vector<ManifestRow> parse_manifest(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<ManifestRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [&](const std::string& what) {
      throw FapError(ErrorKind::MalformedLine,
                     "manifest line " + std::to_string(lineno) + ": " + what);
    };
    ManifestRow row;
    if (kind == "random") {
      row.kind = ManifestRow::Kind::Random;
      if (!(ls >> row.params.n >> row.params.extra_edges >> row.params.zero_fraction >>
            row.params.seed))
        fail("expected: random <n> <extra_edges> <zero_fraction> <seed>");
    } else if (kind == "family") {
      row.kind = ManifestRow::Kind::Family;
      std::string name;
      if (!(ls >> name >> row.k)) fail("expected: family <name> <k>");
      row.family = parse_family(name);
    } else {
      fail("unknown row kind '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
    rows.push_back(row);
  }
  return rows;
}

Instance instantiate(const ManifestRow& row) {
  if (row.kind == ManifestRow::Kind::Random) return gen_random(row.params);
  return gen_family(row.family, row.k);
}

std::vector<TrialRow> run_batch(const std::vector<ManifestRow>& rows, Mode mode,
                                int threads) {
  std::vector<TrialRow> out(rows.size());
  std::string error;
  ErrorKind error_kind = ErrorKind::Infeasible;
  auto run_row = [&](int i) {
    try {
      Instance inst = instantiate(rows[i]);
      auto [sol, rep] = solve(inst, mode);
      (void)rep;
      OptResult opt = opt_bnb(inst, mode);
      TrialRow r;
      r.seed = rows[i].kind == ManifestRow::Kind::Random ? rows[i].params.seed : 0;
      r.n = inst.n();
      r.m = inst.m();
      r.m0 = inst.zero_edge_count();
      r.alg_cost = sol.cost();
      r.opt_cost = opt.opt_cost;
      r.mode = mode;
      out[i] = r;
    } catch (const FapError& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (error.empty()) {
        error = "row " + std::to_string(i + 1) + ": " + e.what();
        error_kind = e.kind;
      }
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (error.empty()) error = "row " + std::to_string(i + 1) + ": " + e.what();
    }
  };

  const int count = static_cast<int>(rows.size());
#ifdef _OPENMP
  if (threads != 1) {
    if (threads > 1) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) run_row(i);
  } else {
    for (int i = 0; i < count; ++i) run_row(i);
  }
#else
  (void)threads;
  for (int i = 0; i < count; ++i) run_row(i);
#endif
  if (!error.empty()) throw FapError(error_kind, error);
  return out;
}

std::string batch_csv(const std::vector<TrialRow>& rows) {
  std::ostringstream out;
  out << "seed,n,m,m0,alg_cost,opt_cost,ratio,mode\n";
  for (const TrialRow& row : rows) {
    char ratio[32];
    std::snprintf(ratio, sizeof(ratio), "%.6f",
                  static_cast<double>(row.alg_cost) / row.opt_cost);
    out << row.seed << ',' << row.n << ',' << row.m << ',' << row.m0 << ',' << row.alg_cost
        << ',' << row.opt_cost << ',' << ratio << ',' << mode_name(row.mode) << '\n';
  }
  return out.str();
}

}  // namespace fap
