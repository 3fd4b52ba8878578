#pragma once

// Shared helpers for the unit tests: tiny instance builders plus slow
// brute-force reference checks that the fast library code is tested against.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fap/connectivity.hpp"
#include "fap/instance.hpp"

namespace testutil {

inline fap::Instance make_instance(int n, std::vector<std::tuple<int, int, int>> edges) {
  std::vector<fap::Edge> es;
  for (auto [u, v, c] : edges) es.push_back({u, v, c});
  return fap::Instance(n, es);
}

// All-unit convenience builder.
inline fap::Instance make_unit(int n, std::vector<std::pair<int, int>> edges) {
  std::vector<fap::Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v, 1});
  return fap::Instance(n, es);
}

inline fap::Instance cycle_unit(int n) {
  std::vector<fap::Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, 1});
  return fap::Instance(n, es);
}

// Component count of the subgraph picked out by the active masks, counting
// every active vertex (isolated ones included). Plain BFS, no cleverness.
inline int components_brute(const fap::Instance& inst, const std::vector<uint8_t>& edge_active,
                            const std::vector<uint8_t>& vertex_active) {
  int n = inst.n();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!vertex_active[s] || comp[s] != -1) continue;
    comp[s] = count;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (auto [w, id] : inst.adjacency()[u]) {
        if (!edge_active[id] || !vertex_active[w] || comp[w] != -1) continue;
        comp[w] = count;
        queue.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

inline int active_vertex_count(const std::vector<uint8_t>& vertex_active) {
  return static_cast<int>(std::count(vertex_active.begin(), vertex_active.end(), 1));
}

// Bridges by definition: drop each active edge and see if the component
// count grows.
inline std::vector<int> bridges_brute(const fap::Instance& inst,
                                      const std::vector<uint8_t>& edge_active) {
  std::vector<uint8_t> all_v(inst.n(), 1);
  int base = components_brute(inst, edge_active, all_v);
  std::vector<int> out;
  std::vector<uint8_t> ea = edge_active;
  for (int id = 0; id < inst.m(); ++id) {
    if (!ea[id]) continue;
    ea[id] = 0;
    if (components_brute(inst, ea, all_v) > base) out.push_back(id);
    ea[id] = 1;
  }
  return out;
}

// Articulation points by definition: drop each vertex (and its edges) and
// compare component counts among the remaining vertices.
inline std::vector<int> articulation_brute(const fap::Instance& inst,
                                           const std::vector<uint8_t>& edge_active) {
  std::vector<uint8_t> all_v(inst.n(), 1);
  int base = components_brute(inst, edge_active, all_v);
  std::vector<int> out;
  for (int v = 0; v < inst.n(); ++v) {
    std::vector<uint8_t> va = all_v;
    va[v] = 0;
    std::vector<uint8_t> ea = edge_active;
    for (auto [w, id] : inst.adjacency()[v]) {
      (void)w;
      ea[id] = 0;
    }
    if (components_brute(inst, ea, va) > base) out.push_back(v);
  }
  return out;
}

inline bool feasible_brute(const fap::Instance& inst, const std::vector<uint8_t>& edge_active,
                           fap::Mode mode) {
  std::vector<uint8_t> all_v(inst.n(), 1);
  if (components_brute(inst, edge_active, all_v) != 1) return false;
  if (mode == fap::Mode::TwoEC) return bridges_brute(inst, edge_active).empty();
  return inst.n() >= 3 && articulation_brute(inst, edge_active).empty();
}

// Exact optimum by full mask enumeration over ALL edges. Only for tiny m.
// Returns -1 when no feasible subset exists.
inline int opt_brute(const fap::Instance& inst, fap::Mode mode) {
  int m = inst.m();
  int best = -1;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    std::vector<uint8_t> ea(m, 0);
    int cost = 0;
    for (int id = 0; id < m; ++id) {
      if (mask >> id & 1) {
        ea[id] = 1;
        cost += inst.edge(id).cost;
      }
    }
    if (best != -1 && cost >= best) continue;
    if (feasible_brute(inst, ea, mode)) best = cost;
  }
  return best;
}

inline std::vector<uint8_t> active_of(const fap::Solution& sol) {
  std::vector<uint8_t> ea(sol.instance().m(), 0);
  for (int id : sol.edge_ids()) ea[id] = 1;
  return ea;
}

}  // namespace testutil
