#pragma once

#include "fap/connectivity.hpp"
#include "fap/instance.hpp"

namespace fap {

enum class OracleMethod { Exhaustive, BnB };

struct OptResult {
  int opt_cost = 0;
  Solution witness;
  long long explored = 0;  // candidate sets / search nodes inspected
  OracleMethod method = OracleMethod::Exhaustive;
};

/*
 * Exact optimum by subset enumeration over the unit-cost edges, by rising
 * cardinality. Zero-cost edges ride along in every candidate: adding a
 * zero-cost edge never breaks feasibility and never raises cost, so some
 * optimal solution contains them all. Preconditions: at most 24 unit edges
 * (TooLarge otherwise); the full edge set must be feasible (Infeasible).
 */
OptResult opt_exhaustive(const Instance& inst, Mode mode);

// Same optimum via include/exclude branch and bound on unit edges, with
// forced-edge, degree-deficit and incumbent pruning. Meant for instances up
// to roughly 40 unit edges.
OptResult opt_bnb(const Instance& inst, Mode mode);

}  // namespace fap
