#pragma once

#include "fap/connectivity.hpp"
#include "fap/instance.hpp"
#include "fap/segments.hpp"

namespace fap {

struct Step2Event {
  enum class Type { Push, Pop, RdRemoved, RdKept };
  Type type;
  int edge = -1;
  int side_vertex = -1;       // Pop only
  std::vector<int> removed;   // RdRemoved only, in removal order
};

/*
 * Full account of one run: edges removed by the first pass, the push/pop
 * stream of the second, and the final shape. Replaying step1_removed and
 * step2_events mechanically against the instance reproduces the returned
 * solution edge for edge.
 */
struct RunReport {
  Mode mode = Mode::TwoVC;
  std::vector<int> step1_removed;
  std::vector<Step2Event> step2_events;
  int step1_cost = 0;
  int final_cost = 0;
  SegmentCensus census;
  int pushes = 0;
  bool closed_segment_seen = false;
  bool deterministic = true;  // fixed ascending-id scan order
};

// Deletes edges of a then b, in ascending edge id order within each list,
// whenever feasibility survives the deletion. Throws InfeasibleInput when f
// itself is infeasible. removed, when given, receives the deleted ids in
// deletion order.
Solution reverse_delete(const Solution& f, const std::vector<int>& a,
                        const std::vector<int>& b, Mode mode,
                        std::vector<int>* removed = nullptr);

// First pass: reverse-delete over the unit-cost edges of the whole instance.
// Keeps every zero-cost edge. Requires a feasible instance.
Solution step1(const Instance& inst, Mode mode, std::vector<int>* removed = nullptr);

// Second pass: repeatedly grafts excluded edges that touch a side vertex of
// a special segment and lets reverse-delete shake out what they obsolete.
// Each excluded edge is considered at most once. Never raises the cost.
std::pair<Solution, RunReport> step2(const Instance& inst, const Solution& f0, Mode mode);

// Front end: block-decomposes, runs both passes per block, unions results.
// Throws DisconnectedInput / BridgeInInput when no solution can exist.
std::pair<Solution, RunReport> solve(const Instance& inst, Mode mode);

// Per-step feasibility re-verification in reverse_delete: enabled by
// FAPKIT_DEBUG_ASSERT=1 in the environment (read once).
bool debug_asserts_enabled();

}  // namespace fap
