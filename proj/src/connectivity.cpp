#include "fap/connectivity.hpp"

#include <algorithm>

namespace fap {

const char* mode_name(Mode m) { return m == Mode::TwoEC ? "2ec" : "2vc"; }

Mode parse_mode(const std::string& s) {
  if (s == "2ec") return Mode::TwoEC;
  if (s == "2vc") return Mode::TwoVC;
  throw FapError(ErrorKind::MalformedLine, "unknown mode '" + s + "' (want 2ec or 2vc)");
}

ConnReport analyze_connectivity(const Instance& inst,
                                const std::vector<uint8_t>& edge_active,
                                const std::vector<uint8_t>* vertex_active) {
  const int n = inst.n();
  ConnReport rep;
  std::vector<int> degree(n, 0);
  auto vert_on = [&](int v) { return !vertex_active || (*vertex_active)[v] != 0; };
  for (int id = 0; id < inst.m(); ++id) {
    if (!edge_active[id]) continue;
    const Edge& e = inst.edge(id);
    if (!vert_on(e.u) || !vert_on(e.v)) continue;
    ++degree[e.u];
    ++degree[e.v];
  }
  rep.spanning = true;
  for (int v = 0; v < n; ++v) {
    if (!vert_on(v)) continue;
    ++rep.active_vertices;
    if (degree[v] == 0) rep.spanning = false;
  }
  if (rep.active_vertices == 0) {
    rep.spanning = false;
    return rep;
  }

  // One iterative lowlink DFS per component; collects bridges and
  // articulation points along the way.
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), child_count(n, 0);
  std::vector<uint8_t> is_ap(n, 0);
  std::vector<size_t> iter(n, 0);
  std::vector<int> stack;
  int timer = 0;
  const auto& adj = inst.adjacency();
  for (int root = 0; root < n; ++root) {
    if (!vert_on(root) || disc[root] != -1) continue;
    ++rep.components;
    if (degree[root] == 0) {
      disc[root] = timer++;
      continue;
    }
    stack.push_back(root);
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int v = stack.back();
      if (iter[v] < adj[v].size()) {
        auto [w, id] = adj[v][iter[v]++];
        if (!edge_active[id] || !vert_on(w)) continue;
        if (id == parent_edge[v]) continue;
        if (disc[w] == -1) {
          parent_edge[w] = id;
          ++child_count[v];
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back();
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) rep.bridge_edges.push_back(parent_edge[v]);
          if (p != root && low[v] >= disc[p]) is_ap[p] = 1;
        }
      }
    }
    if (child_count[root] >= 2) is_ap[root] = 1;
  }
  std::sort(rep.bridge_edges.begin(), rep.bridge_edges.end());
  for (int v = 0; v < n; ++v)
    if (is_ap[v]) rep.articulation_vertices.push_back(v);
  return rep;
}

std::vector<int> bridges(const EdgeView& view) {
  return analyze_connectivity(*view.inst, view.active).bridge_edges;
}

std::vector<int> articulation_points(const EdgeView& view) {
  return analyze_connectivity(*view.inst, view.active).articulation_vertices;
}

static bool feasible_from(const ConnReport& rep, Mode mode) {
  if (!rep.spanning || rep.components != 1) return false;
  if (mode == Mode::TwoEC) return rep.bridge_edges.empty();
  return rep.active_vertices >= 3 && rep.articulation_vertices.empty();
}

bool is_feasible(const EdgeView& view, Mode mode) {
  return feasible_from(analyze_connectivity(*view.inst, view.active), mode);
}

bool is_feasible(const Solution& sol, Mode mode) {
  return feasible_from(analyze_connectivity(sol.instance(), sol.mask()), mode);
}

bool is_feasible_induced(const Instance& inst,
                         const std::vector<uint8_t>& edge_active,
                         const std::vector<uint8_t>& vertex_active, Mode mode) {
  return feasible_from(analyze_connectivity(inst, edge_active, &vertex_active), mode);
}

}  // namespace fap
