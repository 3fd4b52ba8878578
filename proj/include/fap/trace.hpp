#pragma once

#include "fap/solver.hpp"

namespace fap {

/*
 * Line-oriented event log. Grammar (one record per line, '#' comments):
 *
 *   MODE <2ec|2vc>
 *   SHAPE <n> <m>
 *   S1REM <edge>            first-pass deletion, in order
 *   PUSH <edge>
 *   POP <edge> <side-vertex>
 *   RDREM [<edge> ...]      deletions of one reverse-delete call, in order
 *   RDKEPT <edge>           the popped edge survived its reverse-delete
 *   FINALCOST <cost>
 *   FINALEDGES [<edge> ...] ascending
 *   CENSUS <total> <strong> <weak> <special> <trivial> <closed>
 *   END
 *
 * Replay applies the log mechanically: start from the full edge set, delete
 * S1REM edges, insert at POP, delete at RDREM, then compare the final set,
 * cost, census, and feasibility against the FINAL/CENSUS records.
 */
std::string serialize_trace(const Instance& inst, const RunReport& rep,
                            const Solution& final_sol);

// Returns normally on a faithful trace; throws TraceMismatch otherwise.
void replay_trace(const Instance& inst, const std::string& trace_text);

}  // namespace fap
