#pragma once

#include <boost/rational.hpp>

#include "fap/connectivity.hpp"
#include "fap/instance.hpp"

namespace fap {

using Rat = boost::rational<long long>;

std::string format_rat(const Rat& r);          // "3/2", "1", "0"
Rat parse_rat(const std::string& s);           // accepts "p/q" and "p"

/*
 * Dual assignment for the cut LP: a value y_S per stored vertex set S
 * (nonempty proper subsets, each stored once, positive values only) and a
 * slack value z_e per edge. Feasibility means, for every edge e,
 * sum of y_S over stored S with e crossing S  <=  cost(e) + z_e.
 * The objective is 2*sum(y) - sum(z); it never exceeds the cost of any
 * feasible solution (weak duality).
 */
struct DualSolution {
  std::vector<std::pair<std::vector<int>, Rat>> y;  // sets sorted ascending
  std::vector<std::pair<int, Rat>> z;               // by edge id, ascending

  Rat z_of(int edge_id) const;
};

struct DualViolation {
  int edge;
  Rat lhs, rhs;
};

std::pair<bool, std::vector<DualViolation>> check_feasible(const Instance& inst,
                                                           const DualSolution& d);

Rat objective(const DualSolution& d);

struct DualityReport {
  bool holds = false;
  Rat dual_value;
  int solution_cost = 0;
};

// Preconditions: d feasible, sol feasible in the given mode (PreconditionUnmet).
DualityReport weak_duality_check(const Instance& inst, const DualSolution& d,
                                 const Solution& sol, Mode mode);

struct DualClamp {
  int vertex;
  Rat from, to;
  int edge;  // the constraint that forced the reduction
};

/*
 * Singleton-cut dual read off the solution's segment structure:
 *   - high-degree vertices get y = 0;
 *   - side vertices of special segments get y = 1, and each zero-cost
 *     segment edge at such a side vertex gets z raised by 1;
 *   - every other vertex gets y = 0 when both its solution edges are
 *     zero-cost, else y = 1/2 with z raised by 1/2 on an incident zero-cost
 *     solution edge that still has z = 0.
 * The raw assignment can overshoot on edges between two charged vertices;
 * offending y values are clamped down the {1, 1/2, 0} grid (larger value
 * first, then larger vertex id) until feasible, and every clamp is reported.
 */
DualSolution singleton_dual(const Instance& inst, const Solution& sol, Mode mode,
                            std::vector<DualClamp>* clamps = nullptr);

/*
 * Text format, '#' comments:
 *   Y v1,v2,...,vk p/q     one stored set and its value
 *   Z u v p/q              slack for the edge joining u and v
 * Sets are capped at 10000 per file and must be nonempty proper vertex
 * subsets without repeats (MalformedSet). Values must be nonnegative.
 */
DualSolution parse_dual(const Instance& inst, const std::string& text);
std::string serialize_dual(const Instance& inst, const DualSolution& d);

}  // namespace fap
