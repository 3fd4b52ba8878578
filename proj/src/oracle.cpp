#include "fap/oracle.hpp"

#include <algorithm>

namespace fap {

namespace {

std::vector<int> unit_edges(const Instance& inst) {
  std::vector<int> ids;
  for (int id = 0; id < inst.m(); ++id)
    if (inst.edge(id).cost == 1) ids.push_back(id);
  return ids;
}

void require_feasible_whole(const Instance& inst, Mode mode) {
  if (!is_feasible(EdgeView(inst), mode))
    throw FapError(ErrorKind::Infeasible,
                   std::string("instance is not ") + mode_name(mode) + "-feasible");
}

}  // namespace

OptResult opt_exhaustive(const Instance& inst, Mode mode) {
  std::vector<int> units = unit_edges(inst);
  const int k = static_cast<int>(units.size());
  if (k > 24)
    throw FapError(ErrorKind::TooLarge,
                   std::to_string(k) + " unit edges exceed the exhaustive bound of 24");
  require_feasible_whole(inst, mode);

  EdgeView view(inst, false);
  for (int id = 0; id < inst.m(); ++id)
    if (inst.edge(id).cost == 0) view.active[id] = 1;

  long long explored = 0;
  auto try_mask = [&](uint32_t mask) {
    ++explored;
    for (int i = 0; i < k; ++i) view.active[units[i]] = (mask >> i) & 1u;
    return is_feasible(view, mode);
  };

  for (int card = 0; card <= k; ++card) {
    // rising-cardinality bitmask walk; the first feasible set is optimal
    uint32_t mask = (card == 0) ? 0u : (1u << card) - 1u;
    uint32_t limit = 1u << k;
    for (;;) {
      if (try_mask(mask)) {
        Solution witness(inst, false);
        for (int id = 0; id < inst.m(); ++id)
          if (inst.edge(id).cost == 0) witness.insert(id);
        for (int i = 0; i < k; ++i)
          if ((mask >> i) & 1u) witness.insert(units[i]);
        return {card, witness, explored, OracleMethod::Exhaustive};
      }
      if (card == 0) break;
      // Gosper's hack: next bitmask with the same popcount
      uint32_t c = mask & (0u - mask);
      uint32_t r = mask + c;
      uint32_t next = (((r ^ mask) >> 2) / c) | r;
      if (next >= limit) break;
      mask = next;
    }
  }
  throw FapError(ErrorKind::Infeasible, "no feasible subset found");  // unreachable
}

namespace {

struct BnbState {
  const Instance* inst;
  Mode mode;
  std::vector<int> units;
  std::vector<int8_t> decision;  // per unit index: -1 undecided, 0 excluded, 1 included
  std::vector<uint8_t> avail;    // zero edges + not-excluded unit edges
  std::vector<int> base_degree;  // degree over zero edges + included units
  int included_cost = 0;
  int best_cost = -1;
  std::vector<int8_t> best_decision;
  long long explored = 0;

  bool feasible_avail() const {
    return is_feasible_view(avail);
  }
  bool is_feasible_view(const std::vector<uint8_t>& mask) const {
    EdgeView v(*inst, false);
    v.active = mask;
    return is_feasible(v, mode);
  }
  std::vector<uint8_t> included_mask() const {
    std::vector<uint8_t> m(inst->m(), 0);
    for (int id = 0; id < inst->m(); ++id)
      if (inst->edge(id).cost == 0) m[id] = 1;
    for (size_t i = 0; i < units.size(); ++i)
      if (decision[i] == 1) m[units[i]] = 1;
    return m;
  }
};

void bnb(BnbState& st) {
  ++st.explored;
  if (st.best_cost >= 0 && st.included_cost >= st.best_cost) return;

  // everything still available must be feasible as a whole
  if (!st.feasible_avail()) return;

  // forced edges: dropping them from the available pool kills feasibility,
  // so every completion below this node contains them
  std::vector<int> forced;
  for (size_t i = 0; i < st.units.size(); ++i) {
    if (st.decision[i] != -1) continue;
    int id = st.units[i];
    st.avail[id] = 0;
    bool ok = st.feasible_avail();
    st.avail[id] = 1;
    if (!ok) {
      st.decision[i] = 1;
      ++st.included_cost;
      ++st.base_degree[st.inst->edge(id).u];
      ++st.base_degree[st.inst->edge(id).v];
      forced.push_back(static_cast<int>(i));
    }
  }
  auto undo_forced = [&] {
    for (int i : forced) {
      int id = st.units[i];
      st.decision[i] = -1;
      --st.included_cost;
      --st.base_degree[st.inst->edge(id).u];
      --st.base_degree[st.inst->edge(id).v];
    }
  };

  // degree deficit bound: every vertex needs two incident edges; one more
  // unit edge fixes at most two units of deficit
  int deficit = 0;
  for (int v = 0; v < st.inst->n(); ++v)
    deficit += std::max(0, 2 - st.base_degree[v]);
  int lower = st.included_cost + (deficit + 1) / 2;
  if (st.best_cost >= 0 && lower >= st.best_cost) {
    undo_forced();
    return;
  }

  if (st.is_feasible_view(st.included_mask())) {
    if (st.best_cost < 0 || st.included_cost < st.best_cost) {
      st.best_cost = st.included_cost;
      st.best_decision = st.decision;
    }
    undo_forced();
    return;
  }

  // branch on an undecided edge at a max-deficit vertex; fall back to the
  // smallest undecided id
  int pick = -1, pick_score = -1;
  for (size_t i = 0; i < st.units.size(); ++i) {
    if (st.decision[i] != -1) continue;
    const Edge& e = st.inst->edge(st.units[i]);
    int score = std::max(0, 2 - st.base_degree[e.u]) + std::max(0, 2 - st.base_degree[e.v]);
    if (score > pick_score) {
      pick_score = score;
      pick = static_cast<int>(i);
    }
  }
  if (pick == -1) {
    undo_forced();
    return;
  }
  int id = st.units[pick];

  // exclude first: reverse-delete-like descent reaches cheap incumbents fast
  st.decision[pick] = 0;
  st.avail[id] = 0;
  bnb(st);
  st.avail[id] = 1;

  st.decision[pick] = 1;
  ++st.included_cost;
  ++st.base_degree[st.inst->edge(id).u];
  ++st.base_degree[st.inst->edge(id).v];
  bnb(st);
  --st.base_degree[st.inst->edge(id).u];
  --st.base_degree[st.inst->edge(id).v];
  --st.included_cost;
  st.decision[pick] = -1;

  undo_forced();
}

}  // namespace

OptResult opt_bnb(const Instance& inst, Mode mode) {
  require_feasible_whole(inst, mode);
  BnbState st;
  st.inst = &inst;
  st.mode = mode;
  st.units = unit_edges(inst);
  st.decision.assign(st.units.size(), -1);
  st.avail.assign(inst.m(), 0);
  st.base_degree.assign(inst.n(), 0);
  for (int id = 0; id < inst.m(); ++id)
    if (inst.edge(id).cost == 0) {
      st.avail[id] = 1;
      ++st.base_degree[inst.edge(id).u];
      ++st.base_degree[inst.edge(id).v];
    }
  for (int id : st.units) st.avail[id] = 1;

  bnb(st);
  if (st.best_cost < 0)
    throw FapError(ErrorKind::Infeasible, "no feasible subset found");

  Solution witness(inst, false);
  for (int id = 0; id < inst.m(); ++id)
    if (inst.edge(id).cost == 0) witness.insert(id);
  for (size_t i = 0; i < st.units.size(); ++i)
    if (st.best_decision[i] == 1) witness.insert(st.units[i]);
  return {st.best_cost, witness, st.explored, OracleMethod::BnB};
}

}  // namespace fap
