#include <random>

#include "doctest.h"
#include "fap/connectivity.hpp"
#include "test_util.hpp"

using fap::EdgeView;
using fap::Instance;
using fap::Mode;
using fap::Solution;
using testutil::make_unit;

namespace {

// small 2-connected-ish shapes used across the cases
Instance bowtie() {
  return make_unit(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

Instance theta() {
  // hubs 0 and 1, three disjoint paths between them
  return make_unit(8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
}

std::vector<uint8_t> all_edges(const Instance& inst) {
  return std::vector<uint8_t>(inst.m(), 1);
}

}  // namespace

TEST_CASE("cycles are feasible in both modes") {
  for (int n = 3; n <= 7; ++n) {
    Instance inst = testutil::cycle_unit(n);
    CHECK(fap::is_feasible(EdgeView(inst, true), Mode::TwoEC));
    CHECK(fap::is_feasible(EdgeView(inst, true), Mode::TwoVC));
  }
}

TEST_CASE("bowtie separates the two modes") {
  Instance inst = bowtie();
  CHECK(fap::is_feasible(EdgeView(inst, true), Mode::TwoEC));
  CHECK_FALSE(fap::is_feasible(EdgeView(inst, true), Mode::TwoVC));
  CHECK(fap::bridges(EdgeView(inst, true)).empty());
  CHECK(fap::articulation_points(EdgeView(inst, true)) == std::vector<int>{2});
}

TEST_CASE("paths and tiny graphs are infeasible") {
  Instance path = make_unit(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(fap::is_feasible(EdgeView(path, true), Mode::TwoEC));
  CHECK_FALSE(fap::is_feasible(EdgeView(path, true), Mode::TwoVC));
  CHECK(fap::bridges(EdgeView(path, true)) == std::vector<int>{0, 1});

  Instance k2 = make_unit(2, {{0, 1}});
  CHECK_FALSE(fap::is_feasible(EdgeView(k2, true), Mode::TwoEC));
  // fewer than 3 vertices is rejected outright in vertex mode
  CHECK_FALSE(fap::is_feasible(EdgeView(k2, true), Mode::TwoVC));
}

TEST_CASE("theta graph has no bridges and no cut vertices") {
  Instance inst = theta();
  CHECK(fap::bridges(EdgeView(inst, true)).empty());
  CHECK(fap::articulation_points(EdgeView(inst, true)).empty());
  CHECK(fap::is_feasible(EdgeView(inst, true), Mode::TwoVC));
}

TEST_CASE("analyze_connectivity reports components and spanning") {
  Instance inst = make_unit(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  fap::ConnReport rep = fap::analyze_connectivity(inst, all_edges(inst));
  CHECK(rep.components == 2);
  CHECK(rep.spanning);
  CHECK(rep.active_vertices == 6);

  // deactivating one triangle's edges leaves isolated vertices
  std::vector<uint8_t> ea = all_edges(inst);
  ea[3] = ea[4] = ea[5] = 0;
  rep = fap::analyze_connectivity(inst, ea);
  CHECK(rep.components == 4);

  std::vector<uint8_t> va(6, 1);
  va[3] = va[4] = va[5] = 0;
  rep = fap::analyze_connectivity(inst, ea, &va);
  CHECK(rep.components == 1);
  CHECK(rep.active_vertices == 3);
}

TEST_CASE("solution-based feasibility matches the view-based one") {
  Instance inst = bowtie();
  Solution sol(inst, true);
  CHECK(fap::is_feasible(sol, Mode::TwoEC));
  CHECK_FALSE(fap::is_feasible(sol, Mode::TwoVC));
  sol.erase(0);
  CHECK_FALSE(fap::is_feasible(sol, Mode::TwoEC));
}

TEST_CASE("lowlink results agree with brute force on random subgraphs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) pairs.push_back({u, v});
    if (pairs.empty()) continue;
    Instance inst = make_unit(n, pairs);
    std::vector<uint8_t> ea(inst.m());
    for (int id = 0; id < inst.m(); ++id) ea[id] = rng() % 4 != 0;

    EdgeView view(inst, false);
    view.active = ea;
    CHECK(fap::bridges(view) == testutil::bridges_brute(inst, ea));
    CHECK(fap::articulation_points(view) == testutil::articulation_brute(inst, ea));
    CHECK(fap::is_feasible(view, Mode::TwoEC) ==
          testutil::feasible_brute(inst, ea, Mode::TwoEC));
    CHECK(fap::is_feasible(view, Mode::TwoVC) ==
          testutil::feasible_brute(inst, ea, Mode::TwoVC));
  }
}

TEST_CASE("vertex-connected implies edge-connected") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) pairs.push_back({u, v});
    if (pairs.empty()) continue;
    Instance inst = make_unit(n, pairs);
    EdgeView view(inst, true);
    if (fap::is_feasible(view, Mode::TwoVC)) {
      CHECK(fap::is_feasible(view, Mode::TwoEC));
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("induced feasibility ignores inactive vertices") {
  Instance inst = bowtie();
  // keep only the first triangle
  std::vector<uint8_t> ea = {1, 1, 1, 0, 0, 0};
  std::vector<uint8_t> va = {1, 1, 1, 0, 0};
  CHECK(fap::is_feasible_induced(inst, ea, va, Mode::TwoVC));
  CHECK(fap::is_feasible_induced(inst, ea, va, Mode::TwoEC));
  va[3] = 1;  // a stranded active vertex breaks spanning
  CHECK_FALSE(fap::is_feasible_induced(inst, ea, va, Mode::TwoEC));
}
