#include "fap/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "fap/blocks.hpp"

namespace fap {

bool debug_asserts_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("FAPKIT_DEBUG_ASSERT");
    return v && v[0] == '1';
  }();
  return on;
}

Solution reverse_delete(const Solution& f, const std::vector<int>& a,
                        const std::vector<int>& b, Mode mode,
                        std::vector<int>* removed) {
  if (!is_feasible(f, mode))
    throw FapError(ErrorKind::InfeasibleInput, "reverse-delete needs a feasible start");
  const Instance& inst = f.instance();
  Solution cur = f;
  EdgeView view(inst, false);
  view.active = cur.mask();
  auto sweep = [&](std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    for (int id : ids) {
      assert(cur.contains(id));
      view.active[id] = 0;
      if (is_feasible(view, mode)) {
        cur.erase(id);
        if (removed) removed->push_back(id);
        if (debug_asserts_enabled() && !is_feasible(cur, mode))
          throw FapError(ErrorKind::InfeasibleInput,
                         "feasibility lost after deleting edge " + std::to_string(id));
      } else {
        view.active[id] = 1;
      }
    }
  };
  sweep(a);
  sweep(b);
  return cur;
}

Solution step1(const Instance& inst, Mode mode, std::vector<int>* removed) {
  Solution all(inst, true);
  std::vector<int> units;
  for (int id = 0; id < inst.m(); ++id)
    if (inst.edge(id).cost == 1) units.push_back(id);
  return reverse_delete(all, units, {}, mode, removed);
}

namespace {

// side vertices of special segments, plus which special segments end where
struct SpecialMap {
  std::vector<uint8_t> is_side;              // vertex -> touches a special segment's side
  std::vector<std::vector<int>> by_end;      // vertex -> indices of special segments ending there
  std::vector<Segment> segs;
  bool closed_seen = false;
};

SpecialMap special_map(const Solution& sol, Mode mode) {
  SpecialMap out;
  out.segs = segments_of(sol, mode);
  out.is_side.assign(sol.instance().n(), 0);
  out.by_end.assign(sol.instance().n(), {});
  for (size_t i = 0; i < out.segs.size(); ++i) {
    const Segment& s = out.segs[i];
    if (s.closed) out.closed_seen = true;
    if (!s.special) continue;
    auto [sv1, sv2] = s.side_vertices();
    out.is_side[sv1] = 1;
    out.is_side[sv2] = 1;
    out.by_end[s.end1()].push_back(static_cast<int>(i));
    if (s.end2() != s.end1()) out.by_end[s.end2()].push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

std::pair<Solution, RunReport> step2(const Instance& inst, const Solution& f0, Mode mode) {
  if (!is_feasible(f0, mode))
    throw FapError(ErrorKind::InfeasibleInput, "second pass needs a feasible start");
  RunReport rep;
  rep.mode = mode;
  rep.step1_cost = f0.cost();

  Solution f = f0;
  // the excluded edge pool is frozen here; edges enter at most once
  std::vector<uint8_t> in_pool(inst.m(), 0), visited(inst.m(), 0);
  for (int id = 0; id < inst.m(); ++id)
    if (!f0.contains(id)) in_pool[id] = 1;

  std::vector<int> stack;
  auto push = [&](int id) {
    assert(in_pool[id] && !visited[id]);
    visited[id] = 1;
    stack.push_back(id);
    rep.step2_events.push_back({Step2Event::Type::Push, id, -1, {}});
    ++rep.pushes;
  };

  // sm always describes the current f; f only changes inside reverse-delete
  SpecialMap sm = special_map(f, mode);
  rep.closed_segment_seen |= sm.closed_seen;
  for (;;) {
    if (mode == Mode::TwoVC) assert(!sm.closed_seen);
    int entry = -1;
    for (int id = 0; id < inst.m(); ++id) {
      if (!in_pool[id] || visited[id]) continue;
      const Edge& e = inst.edge(id);
      if (sm.is_side[e.u] || sm.is_side[e.v]) {
        entry = id;
        break;
      }
    }
    if (entry == -1) break;
    push(entry);

    while (!stack.empty()) {
      int fid = stack.back();
      stack.pop_back();
      const Edge& fe = inst.edge(fid);
      // the popped edge was pushed for touching a side vertex and f has not
      // changed since; with both endpoints qualifying the smaller vertex id
      // is the side
      int u, v;
      if (sm.is_side[fe.u] && sm.is_side[fe.v]) {
        u = std::min(fe.u, fe.v);
        v = std::max(fe.u, fe.v);
      } else if (sm.is_side[fe.u]) {
        u = fe.u;
        v = fe.v;
      } else {
        assert(sm.is_side[fe.v]);
        u = fe.v;
        v = fe.u;
      }
      rep.step2_events.push_back({Step2Event::Type::Pop, fid, u, {}});

      std::vector<int> f1;
      for (int id = 0; id < inst.m(); ++id)
        if (f.contains(id) && inst.edge(id).cost == 1) f1.push_back(id);
      assert(!f.contains(fid));
      int cost_before = f.cost();
      Solution grown = f;
      grown.insert(fid);
      std::vector<int> removed;
      f = reverse_delete(grown, f1, {fid}, mode, &removed);
      rep.step2_events.push_back({Step2Event::Type::RdRemoved, -1, -1, removed});
      if (f.contains(fid))
        rep.step2_events.push_back({Step2Event::Type::RdKept, fid, -1, {}});
      assert(f.cost() <= cost_before);
      (void)cost_before;

      sm = special_map(f, mode);
      rep.closed_segment_seen |= sm.closed_seen;

      // hunt for a successor at the far endpoint: an unvisited excluded edge
      // touching a side vertex of a special segment that ends at v
      std::vector<uint8_t> wanted(inst.n(), 0);
      for (int si : sm.by_end[v]) {
        auto [sv1, sv2] = sm.segs[si].side_vertices();
        wanted[sv1] = 1;
        wanted[sv2] = 1;
      }
      int next = -1;
      for (int id = 0; id < inst.m(); ++id) {
        if (!in_pool[id] || visited[id]) continue;
        const Edge& e = inst.edge(id);
        if (wanted[e.u] || wanted[e.v]) {
          next = id;
          break;
        }
      }
      if (next != -1) push(next);
    }
  }

  assert(f.cost() <= f0.cost());
  for (int id = 0; id < inst.m(); ++id)
    if (inst.edge(id).cost == 0 && f0.contains(id)) assert(f.contains(id));
  rep.final_cost = f.cost();
  rep.census = census_of(segments_of(f, mode));
  return {f, rep};
}

std::pair<Solution, RunReport> solve(const Instance& inst, Mode mode) {
  std::vector<Block> blks = blocks(inst);
  for (const Block& b : blks) {
    if (b.inst.n() < 3)
      throw FapError(ErrorKind::BridgeInInput,
                     "bridge between vertices " + std::to_string(b.vertex_map[0]) + " and " +
                         std::to_string(b.vertex_map[1]) + "; no solution exists");
  }
  if (blks.empty())
    throw FapError(ErrorKind::BridgeInInput, "instance has no cycle; no solution exists");

  Solution out(inst, false);
  RunReport rep;
  rep.mode = mode;
  for (const Block& b : blks) {
    std::vector<int> s1_removed;
    Solution f0 = step1(b.inst, mode, &s1_removed);
    auto [bf, brep] = step2(b.inst, f0, mode);
    for (int lid = 0; lid < b.inst.m(); ++lid)
      if (bf.contains(lid)) out.insert(b.edge_map[lid]);
    rep.step1_cost += brep.step1_cost;
    for (int lid : s1_removed) rep.step1_removed.push_back(b.edge_map[lid]);
    for (Step2Event ev : brep.step2_events) {
      if (ev.edge >= 0) ev.edge = b.edge_map[ev.edge];
      if (ev.side_vertex >= 0) ev.side_vertex = b.vertex_map[ev.side_vertex];
      for (int& id : ev.removed) id = b.edge_map[id];
      rep.step2_events.push_back(std::move(ev));
    }
    rep.pushes += brep.pushes;
    rep.closed_segment_seen |= brep.closed_segment_seen;
    rep.census.total += brep.census.total;
    rep.census.strong += brep.census.strong;
    rep.census.weak += brep.census.weak;
    rep.census.special += brep.census.special;
    rep.census.trivial += brep.census.trivial;
    rep.census.closed += brep.census.closed;
  }
  rep.final_cost = out.cost();
  return {out, rep};
}

}  // namespace fap
