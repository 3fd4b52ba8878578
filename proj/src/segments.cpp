#include "fap/segments.hpp"

#include <algorithm>
#include <cassert>

namespace fap {

std::vector<int> high_degree_vertices(const Solution& sol) {
  const Instance& inst = sol.instance();
  std::vector<int> degree(inst.n(), 0);
  for (int id = 0; id < inst.m(); ++id) {
    if (!sol.contains(id)) continue;
    ++degree[inst.edge(id).u];
    ++degree[inst.edge(id).v];
  }
  std::vector<int> out;
  for (int v = 0; v < inst.n(); ++v)
    if (degree[v] >= 3) out.push_back(v);
  return out;
}

std::vector<Segment> enumerate_segments(const Solution& sol) {
  const Instance& inst = sol.instance();
  const int n = inst.n();
  std::vector<int> degree(n, 0);
  for (int id = 0; id < inst.m(); ++id) {
    if (!sol.contains(id)) continue;
    ++degree[inst.edge(id).u];
    ++degree[inst.edge(id).v];
  }
  std::vector<Segment> segs;
  std::vector<uint8_t> used(inst.m(), 0);
  const auto& adj = inst.adjacency();
  for (int h = 0; h < n; ++h) {
    if (degree[h] < 3) continue;
    for (auto [w0, id0] : adj[h]) {
      if (!sol.contains(id0) || used[id0]) continue;
      Segment seg;
      seg.vertices.push_back(h);
      int prev = h, cur = w0, via = id0;
      used[id0] = 1;
      seg.edges.push_back(id0);
      seg.vertices.push_back(cur);
      while (degree[cur] == 2) {
        int next = -1, next_id = -1;
        for (auto [w, id] : adj[cur]) {
          if (!sol.contains(id) || id == via) continue;
          next = w;
          next_id = id;
          break;
        }
        assert(next_id != -1);
        used[next_id] = 1;
        prev = cur;
        cur = next;
        via = next_id;
        seg.edges.push_back(next_id);
        seg.vertices.push_back(cur);
      }
      (void)prev;
      seg.closed = seg.end1() == seg.end2();
      // canonical orientation: smaller end first; closed paths orient by
      // the vertices adjacent to the origin
      bool flip = seg.end1() > seg.end2();
      if (seg.closed)
        flip = seg.vertices[1] > seg.vertices[seg.vertices.size() - 2];
      if (flip) {
        std::reverse(seg.vertices.begin(), seg.vertices.end());
        std::reverse(seg.edges.begin(), seg.edges.end());
      }
      segs.push_back(std::move(seg));
    }
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    return *std::min_element(a.edges.begin(), a.edges.end()) <
           *std::min_element(b.edges.begin(), b.edges.end());
  });
  return segs;
}

void classify_segments(const Solution& sol, Mode mode, std::vector<Segment>& segs) {
  const Instance& inst = sol.instance();
  for (Segment& seg : segs) {
    std::vector<uint8_t> edge_active = sol.mask();
    for (int id : seg.edges) edge_active[id] = 0;
    std::vector<uint8_t> vertex_active(inst.n(), 1);
    for (size_t i = 1; i + 1 < seg.vertices.size(); ++i)
      vertex_active[seg.vertices[i]] = 0;
    bool strong = is_feasible_induced(inst, edge_active, vertex_active, mode);
    seg.kind = strong ? SegKind::Strong : SegKind::Weak;
    seg.special = false;
    if (strong && seg.length() >= 2) {
      auto [se1, se2] = seg.side_edges();
      bool interior_zero = true;
      int unit_sides = 0;
      for (int id : seg.edges) {
        if (id == se1 || id == se2) {
          if (inst.edge(id).cost == 1) ++unit_sides;
        } else if (inst.edge(id).cost == 1) {
          interior_zero = false;
        }
      }
      seg.special = interior_zero && unit_sides >= 1;
    }
  }
}

std::vector<Segment> segments_of(const Solution& sol, Mode mode) {
  std::vector<Segment> segs = enumerate_segments(sol);
  classify_segments(sol, mode, segs);
  return segs;
}

SegmentCensus census_of(const std::vector<Segment>& segs) {
  SegmentCensus c;
  c.total = static_cast<int>(segs.size());
  for (const Segment& s : segs) {
    if (s.kind == SegKind::Strong)
      ++c.strong;
    else
      ++c.weak;
    if (s.special) ++c.special;
    if (s.trivial()) ++c.trivial;
    if (s.closed) ++c.closed;
  }
  return c;
}

}  // namespace fap
