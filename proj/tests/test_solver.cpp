#include <map>
#include <random>

#include "doctest.h"
#include "fap/blocks.hpp"
#include "fap/generators.hpp"
#include "fap/solver.hpp"
#include "fap/trace.hpp"
#include "test_util.hpp"

using fap::Instance;
using fap::Mode;
using fap::RunReport;
using fap::Solution;
using fap::Step2Event;
using testutil::make_instance;
using testutil::make_unit;

namespace {

Instance k4() { return make_unit(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Instance push6() {
  return make_instance(6, {{2, 5, 1},
                           {0, 2, 1},
                           {1, 2, 1},
                           {0, 3, 0},
                           {3, 4, 0},
                           {1, 4, 0},
                           {0, 5, 1},
                           {1, 5, 1}});
}

std::vector<int> all_ids(const Instance& inst) {
  std::vector<int> ids(inst.m());
  for (int id = 0; id < inst.m(); ++id) ids[id] = id;
  return ids;
}

}  // namespace

TEST_CASE("reverse delete keeps a bare cycle intact") {
  Instance inst = testutil::cycle_unit(4);
  Solution f(inst, true);
  std::vector<int> removed;
  Solution out = fap::reverse_delete(f, all_ids(inst), {}, Mode::TwoVC, &removed);
  CHECK(out == f);
  CHECK(removed.empty());
}

TEST_CASE("reverse delete thins the complete graph to a hamiltonian cycle") {
  Instance inst = k4();
  Solution f(inst, true);
  std::vector<int> removed;
  Solution out = fap::reverse_delete(f, all_ids(inst), {}, Mode::TwoVC, &removed);
  CHECK(removed == std::vector<int>{0, 5});
  CHECK(out.edge_ids() == std::vector<int>{1, 2, 3, 4});
  CHECK(out.cost() == 4);
}

TEST_CASE("reverse delete scans list a before list b") {
  // edges 0=(0,1) and 1=(0,2) of K4: either may go alone, never both
  Instance inst = k4();
  Solution f(inst, true);
  std::vector<int> removed;
  Solution out = fap::reverse_delete(f, {0}, {1}, Mode::TwoVC, &removed);
  CHECK(removed == std::vector<int>{0});
  CHECK_FALSE(out.contains(0));
  CHECK(out.contains(1));

  removed.clear();
  out = fap::reverse_delete(f, {1}, {0}, Mode::TwoVC, &removed);
  CHECK(removed == std::vector<int>{1});
  CHECK(out.contains(0));
}

TEST_CASE("reverse delete rejects an infeasible start") {
  Instance inst = make_unit(3, {{0, 1}, {1, 2}});
  Solution f(inst, true);
  CHECK_THROWS_AS(fap::reverse_delete(f, {0}, {}, Mode::TwoVC, nullptr),
                  fap::FapError);
}

TEST_CASE("first pass keeps zero edges and minimizes unit edges") {
  Instance tri = make_instance(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 1}});
  Solution f0 = fap::step1(tri, Mode::TwoVC);
  CHECK(f0.size() == 3);
  CHECK(f0.cost() == 1);

  Instance c5 = testutil::cycle_unit(5);
  CHECK(fap::step1(c5, Mode::TwoVC).cost() == 5);

  std::vector<int> removed;
  Instance ik4 = k4();
  Solution fk4 = fap::step1(ik4, Mode::TwoVC, &removed);
  CHECK(fk4.cost() == 4);
  CHECK(removed == std::vector<int>{0, 5});

  removed.clear();
  Instance ip6 = push6();
  Solution fp6 = fap::step1(ip6, Mode::TwoVC, &removed);
  CHECK(removed == std::vector<int>{0});
  CHECK(fp6.cost() == 4);
  CHECK(fp6.edge_ids() == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("second pass replays the recorded push pop sequence") {
  Instance inst = push6();
  Solution f0 = fap::step1(inst, Mode::TwoVC);
  auto [f, rep] = fap::step2(inst, f0, Mode::TwoVC);

  CHECK(f.edge_ids() == std::vector<int>{0, 2, 3, 4, 5, 6});
  CHECK(f.cost() == 3);
  CHECK(rep.pushes == 1);
  REQUIRE(rep.step2_events.size() == 4);

  const auto& ev = rep.step2_events;
  CHECK(ev[0].type == Step2Event::Type::Push);
  CHECK(ev[0].edge == 0);
  CHECK(ev[1].type == Step2Event::Type::Pop);
  CHECK(ev[1].edge == 0);
  CHECK(ev[1].side_vertex == 2);  // both ends qualify; smaller id wins
  CHECK(ev[2].type == Step2Event::Type::RdRemoved);
  CHECK(ev[2].removed == std::vector<int>{1, 7});
  CHECK(ev[3].type == Step2Event::Type::RdKept);
  CHECK(ev[3].edge == 0);
}

TEST_CASE("second pass is a no-op without special segments or spare edges") {
  // chorded hexagon: the first pass already lands on the plain cycle
  Instance inst = make_unit(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {0, 4}});
  Solution f0 = fap::step1(inst, Mode::TwoVC);
  CHECK(f0.edge_ids() == std::vector<int>{0, 1, 2, 3, 4, 5});
  auto [f, rep] = fap::step2(inst, f0, Mode::TwoVC);
  CHECK(f == f0);
  CHECK(rep.step2_events.empty());
  CHECK(rep.pushes == 0);

  // minimal input: nothing outside the first-pass solution to consider
  Instance c5 = testutil::cycle_unit(5);
  Solution c5f0 = fap::step1(c5, Mode::TwoVC);
  auto [c5f, c5rep] = fap::step2(c5, c5f0, Mode::TwoVC);
  CHECK(c5f == c5f0);
  CHECK(c5rep.step2_events.empty());
}

TEST_CASE("solve end to end on the pinned instances") {
  Instance tri = make_instance(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 1}});
  auto [tri_sol, tri_rep] = fap::solve(tri, Mode::TwoVC);
  CHECK(tri_sol.cost() == 1);
  CHECK(tri_rep.step1_cost == 1);

  Instance c4 = testutil::cycle_unit(4);
  auto [c4_sol, c4_rep] = fap::solve(c4, Mode::TwoVC);
  CHECK(c4_sol.cost() == 4);

  Instance ik4 = k4();
  auto [k4_sol, k4_rep] = fap::solve(ik4, Mode::TwoVC);
  CHECK(k4_sol.cost() == 4);

  Instance ip6 = push6();
  auto [p6_sol, p6_rep] = fap::solve(ip6, Mode::TwoVC);
  CHECK(p6_sol.cost() == 3);
  CHECK(p6_rep.step1_cost == 4);
  CHECK(p6_rep.step1_removed == std::vector<int>{0});
  CHECK(p6_rep.pushes == 1);
}

TEST_CASE("solve handles multi-block inputs and rejects hopeless ones") {
  Instance bowtie = make_unit(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  auto [sol, rep] = fap::solve(bowtie, Mode::TwoVC);
  CHECK(sol.size() == 6);
  CHECK(sol.cost() == 6);
  CHECK(fap::is_feasible(sol, Mode::TwoEC));  // glued blocks are edge-connected

  Instance bridged =
      make_unit(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(fap::solve(bridged, Mode::TwoVC), fap::FapError);
  try {
    fap::solve(bridged, Mode::TwoVC);
  } catch (const fap::FapError& e) {
    CHECK(e.kind == fap::ErrorKind::BridgeInInput);
  }

  Instance split = make_unit(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  try {
    fap::solve(split, Mode::TwoVC);
    FAIL("expected rejection");
  } catch (const fap::FapError& e) {
    CHECK(e.kind == fap::ErrorKind::DisconnectedInput);
  }
}

TEST_CASE("closed segments are reported in edge mode") {
  // unit bowtie plus a zero bridge-free shortcut is still one block in
  // edge mode only when 2-connected, so exercise via a K4 whose first pass
  // leaves a closed loop: simplest is solving the bowtie blocks directly
  Instance bowtie = make_unit(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  Solution f(bowtie, true);
  auto segs = fap::segments_of(f, Mode::TwoEC);
  CHECK(segs.size() == 2);
  // the solver view of the same shape comes from per-block runs, which never
  // see the closed loop; the flag stays down on block-decomposed inputs
  auto [sol, rep] = fap::solve(bowtie, Mode::TwoEC);
  CHECK_FALSE(rep.closed_segment_seen);
  CHECK(sol.cost() == 6);
}

TEST_CASE("randomized solves satisfy the structural contract") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    fap::GenParams p;
    p.n = 5 + static_cast<int>(rng() % 8);
    p.extra_edges = static_cast<int>(rng() % 6);
    p.zero_fraction = (rng() % 3) * 0.2;
    p.seed = rng();
    Instance inst = fap::gen_random(p);
    Mode mode = rng() % 2 ? Mode::TwoVC : Mode::TwoEC;

    auto [sol, rep] = fap::solve(inst, mode);
    // generated instances are 2-connected, so one block and full-mode feasibility
    CHECK(fap::is_feasible(sol, mode));
    CHECK(sol.cost() <= rep.step1_cost);
    CHECK(sol.cost() == rep.final_cost);
    for (int id = 0; id < inst.m(); ++id)
      if (inst.edge(id).cost == 0) CHECK(sol.contains(id));

    // no unit edge of the first pass output is removable: minimality
    Solution f0 = fap::step1(inst, mode);
    for (int id : f0.edge_ids()) {
      if (inst.edge(id).cost == 0) continue;
      Solution probe = f0;
      probe.erase(id);
      CHECK_FALSE(fap::is_feasible(probe, mode));
    }

    // every excluded edge is pushed at most once
    std::map<int, int> pushed;
    for (const Step2Event& ev : rep.step2_events)
      if (ev.type == Step2Event::Type::Push) ++pushed[ev.edge];
    for (auto [edge, count] : pushed) {
      CHECK(count == 1);
      CHECK_FALSE(f0.contains(edge));
    }

    // determinism: a second run reproduces the identical report
    auto [sol2, rep2] = fap::solve(inst, mode);
    CHECK(sol2 == sol);
    CHECK(fap::serialize_trace(inst, rep2, sol2) == fap::serialize_trace(inst, rep, sol));
  }
}
