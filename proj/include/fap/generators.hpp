#pragma once

#include <cstdint>
#include <optional>

#include "fap/connectivity.hpp"
#include "fap/instance.hpp"

namespace fap {

/*
 * Seeded random instance: a Hamiltonian cycle over a shuffled vertex order,
 * extra_edges distinct chords, then a greedy random acyclic subset of edges
 * marked zero-cost aiming at zero_fraction of m. Identical params give
 * byte-identical instances.
 */
struct GenParams {
  int n = 8;
  int extra_edges = 0;
  double zero_fraction = 0.0;
  uint64_t seed = 0;
  Mode mode = Mode::TwoVC;
};

Instance gen_random(const GenParams& p);  // ParamsInvalid on bad shapes

enum class Family { Cycle, Theta, Wheel, TapPath, MapMatching };

Family parse_family(const std::string& name);
const char* family_name(Family f);

// cycle(k):        unit cycle C_k, k >= 3
// theta(k):        two hubs joined by three disjoint unit paths with k
//                  interior vertices each, k >= 1
// wheel(k):        unit hub-and-rim wheel on k+1 vertices, k >= 3
// tap_path(k):     zero-cost Hamiltonian path 0..k-1 plus the unit closing
//                  edge (k-1,0) and unit chords (i,i+2), k >= 3; the chord
//                  that would repeat the closing edge at k = 3 is dropped
// map_matching(k): unit cycle C_{2k} plus a zero-cost diameter matching
//                  (i, i+k), k >= 2
Instance gen_family(Family f, int k);

struct TrialRow {
  uint64_t seed = 0;
  int n = 0, m = 0, m0 = 0;
  int alg_cost = 0, opt_cost = 0;
  Mode mode = Mode::TwoVC;
};

struct SearchResult {
  std::vector<TrialRow> rows;  // trial order
  int best_index = -1;         // max alg/opt, exact comparison; first on ties
  // certificate for the best row, regenerated deterministically after the scan
  std::optional<Instance> best_instance;
  std::vector<int> best_alg_edges;
  std::vector<int> best_opt_edges;
};

// ratio comparison without floating point
bool ratio_less(long long a_num, long long a_den, long long b_num, long long b_den);

/*
 * Runs solve and the branch-and-bound oracle on `trials` instances drawn
 * from p with per-trial seed p.seed ^ t, and reports the worst ratio. Trials
 * are sharded across OpenMP workers when threads != 1; results land in
 * trial-indexed slots, so the output is identical for any thread count.
 */
SearchResult worst_case_search(const GenParams& p, int trials, int threads = 0);

std::string search_csv(const SearchResult& r);  // header + one row per trial

}  // namespace fap
