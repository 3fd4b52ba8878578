#pragma once

#include "fap/instance.hpp"

namespace fap {

// TwoEC: spanning, connected, bridgeless.
// TwoVC: spanning, connected, no articulation point, at least 3 vertices.
enum class Mode { TwoEC, TwoVC };

const char* mode_name(Mode m);        // "2ec" / "2vc"
Mode parse_mode(const std::string&);  // accepts "2ec" / "2vc"

// Active edge subset of an instance; the vertex set is always all n vertices.
struct EdgeView {
  const Instance* inst;
  std::vector<uint8_t> active;

  explicit EdgeView(const Instance& i, bool all_edges = true)
      : inst(&i), active(i.m(), all_edges ? 1 : 0) {}
  explicit EdgeView(const Solution& s) : inst(&s.instance()), active(s.mask()) {}
};

// Connectivity facts for one pass over the active subgraph. Bridges and
// articulation points use standard per-component semantics; isolated active
// vertices count as their own components.
struct ConnReport {
  int active_vertices = 0;
  int components = 0;
  bool spanning = false;  // every active vertex has an active incident edge
  std::vector<int> bridge_edges;           // ascending edge id
  std::vector<int> articulation_vertices;  // ascending vertex id
};

ConnReport analyze_connectivity(const Instance& inst,
                                const std::vector<uint8_t>& edge_active,
                                const std::vector<uint8_t>* vertex_active = nullptr);

std::vector<int> bridges(const EdgeView& view);
std::vector<int> articulation_points(const EdgeView& view);
bool is_feasible(const EdgeView& view, Mode mode);
bool is_feasible(const Solution& sol, Mode mode);

// Feasibility on the subgraph induced by vertex_active; used by segment
// classification where interior vertices are deleted together with a path.
bool is_feasible_induced(const Instance& inst,
                         const std::vector<uint8_t>& edge_active,
                         const std::vector<uint8_t>& vertex_active, Mode mode);

}  // namespace fap
