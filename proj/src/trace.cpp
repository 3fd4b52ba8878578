#include "fap/trace.hpp"

#include <sstream>

#include "fap/blocks.hpp"

namespace fap {

std::string serialize_trace(const Instance& inst, const RunReport& rep,
                            const Solution& final_sol) {
  std::ostringstream out;
  out << "MODE " << mode_name(rep.mode) << '\n';
  out << "SHAPE " << inst.n() << ' ' << inst.m() << '\n';
  for (int id : rep.step1_removed) out << "S1REM " << id << '\n';
  for (const Step2Event& ev : rep.step2_events) {
    switch (ev.type) {
      case Step2Event::Type::Push:
        out << "PUSH " << ev.edge << '\n';
        break;
      case Step2Event::Type::Pop:
        out << "POP " << ev.edge << ' ' << ev.side_vertex << '\n';
        break;
      case Step2Event::Type::RdRemoved:
        out << "RDREM";
        for (int id : ev.removed) out << ' ' << id;
        out << '\n';
        break;
      case Step2Event::Type::RdKept:
        out << "RDKEPT " << ev.edge << '\n';
        break;
    }
  }
  out << "FINALCOST " << final_sol.cost() << '\n';
  out << "FINALEDGES";
  for (int id : final_sol.edge_ids()) out << ' ' << id;
  out << '\n';
  const SegmentCensus& c = rep.census;
  out << "CENSUS " << c.total << ' ' << c.strong << ' ' << c.weak << ' ' << c.special
      << ' ' << c.trivial << ' ' << c.closed << '\n';
  out << "END\n";
  return out.str();
}

namespace {

[[noreturn]] void mismatch(int lineno, const std::string& what) {
  throw FapError(ErrorKind::TraceMismatch,
                 "trace line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

void replay_trace(const Instance& inst, const std::string& trace_text) {
  std::istringstream in(trace_text);
  std::string line;
  int lineno = 0;

  Solution f(inst, true);
  std::vector<uint8_t> in_pool(inst.m(), 0), visited(inst.m(), 0);
  std::vector<int> stack;
  bool pool_frozen = false;
  bool saw_mode = false, saw_shape = false, saw_end = false;
  bool saw_final_cost = false, saw_final_edges = false, saw_census = false;
  Mode mode = Mode::TwoVC;
  int last_pop = -1;

  auto freeze_pool = [&] {
    if (pool_frozen) return;
    pool_frozen = true;
    for (int id = 0; id < inst.m(); ++id)
      if (!f.contains(id)) in_pool[id] = 1;
  };
  auto edge_id = [&](const std::string& tok, int lno) {
    int id;
    try {
      id = std::stoi(tok);
    } catch (...) {
      mismatch(lno, "bad edge id '" + tok + "'");
    }
    if (id < 0 || id >= inst.m()) mismatch(lno, "edge id out of range");
    return id;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (saw_end) mismatch(lineno, "content after END");
    if (tag == "MODE") {
      std::string ms;
      if (!(ls >> ms)) mismatch(lineno, "MODE needs a value");
      try {
        mode = parse_mode(ms);
      } catch (const FapError&) {
        mismatch(lineno, "unknown mode");
      }
      saw_mode = true;
    } else if (tag == "SHAPE") {
      int n, m;
      if (!(ls >> n >> m)) mismatch(lineno, "SHAPE needs n and m");
      if (n != inst.n() || m != inst.m())
        mismatch(lineno, "trace was recorded for a different instance");
      saw_shape = true;
    } else if (tag == "S1REM") {
      if (pool_frozen) mismatch(lineno, "S1REM after second pass began");
      std::string tok;
      if (!(ls >> tok)) mismatch(lineno, "S1REM needs an edge");
      int id = edge_id(tok, lineno);
      if (!f.contains(id)) mismatch(lineno, "S1REM edge already absent");
      if (inst.edge(id).cost != 1) mismatch(lineno, "first pass deleted a zero-cost edge");
      f.erase(id);
    } else if (tag == "PUSH") {
      freeze_pool();
      std::string tok;
      if (!(ls >> tok)) mismatch(lineno, "PUSH needs an edge");
      int id = edge_id(tok, lineno);
      if (!in_pool[id]) mismatch(lineno, "pushed edge was never excluded");
      if (visited[id]) mismatch(lineno, "edge pushed twice");
      visited[id] = 1;
      stack.push_back(id);
    } else if (tag == "POP") {
      std::string tok;
      int side;
      if (!(ls >> tok >> side)) mismatch(lineno, "POP needs edge and side vertex");
      int id = edge_id(tok, lineno);
      if (stack.empty() || stack.back() != id) mismatch(lineno, "POP does not match stack");
      stack.pop_back();
      const Edge& e = inst.edge(id);
      if (side != e.u && side != e.v) mismatch(lineno, "side vertex not on popped edge");
      if (f.contains(id)) mismatch(lineno, "popped edge already present");
      f.insert(id);
      last_pop = id;
    } else if (tag == "RDREM") {
      std::string tok;
      while (ls >> tok) {
        int id = edge_id(tok, lineno);
        if (!f.contains(id)) mismatch(lineno, "RDREM edge already absent");
        f.erase(id);
      }
    } else if (tag == "RDKEPT") {
      std::string tok;
      if (!(ls >> tok)) mismatch(lineno, "RDKEPT needs an edge");
      int id = edge_id(tok, lineno);
      if (id != last_pop) mismatch(lineno, "RDKEPT does not follow its POP");
      if (!f.contains(id)) mismatch(lineno, "RDKEPT edge absent");
    } else if (tag == "FINALCOST") {
      int c;
      if (!(ls >> c)) mismatch(lineno, "FINALCOST needs a value");
      if (c != f.cost())
        mismatch(lineno, "replayed cost " + std::to_string(f.cost()) + " != recorded " +
                             std::to_string(c));
      saw_final_cost = true;
    } else if (tag == "FINALEDGES") {
      Solution rec(inst, false);
      std::string tok;
      while (ls >> tok) rec.insert(edge_id(tok, lineno));
      if (!(rec == f)) mismatch(lineno, "replayed edge set differs from recorded one");
      saw_final_edges = true;
    } else if (tag == "CENSUS") {
      SegmentCensus c;
      if (!(ls >> c.total >> c.strong >> c.weak >> c.special >> c.trivial >> c.closed))
        mismatch(lineno, "CENSUS needs six values");
      SegmentCensus actual;
      std::vector<Block> blks = blocks(inst);
      for (const Block& b : blks) {
        Solution bs(b.inst, false);
        for (int lid = 0; lid < b.inst.m(); ++lid)
          if (f.contains(b.edge_map[lid])) bs.insert(lid);
        SegmentCensus bc = census_of(segments_of(bs, mode));
        actual.total += bc.total;
        actual.strong += bc.strong;
        actual.weak += bc.weak;
        actual.special += bc.special;
        actual.trivial += bc.trivial;
        actual.closed += bc.closed;
      }
      if (!(actual == c)) mismatch(lineno, "segment census differs");
      saw_census = true;
    } else if (tag == "END") {
      saw_end = true;
    } else {
      mismatch(lineno, "unknown record '" + tag + "'");
    }
  }
  if (!saw_mode || !saw_shape || !saw_end || !saw_final_cost || !saw_final_edges ||
      !saw_census)
    throw FapError(ErrorKind::TraceMismatch, "trace is missing required records");
  if (!stack.empty())
    throw FapError(ErrorKind::TraceMismatch, "trace left edges on the stack");

  // the replayed solution must stand on its own: feasible per block in the
  // recorded mode
  std::vector<Block> blks = blocks(inst);
  for (const Block& b : blks) {
    Solution bs(b.inst, false);
    for (int lid = 0; lid < b.inst.m(); ++lid)
      if (f.contains(b.edge_map[lid])) bs.insert(lid);
    if (!is_feasible(bs, mode))
      throw FapError(ErrorKind::TraceMismatch, "replayed solution is not feasible");
  }
}

}  // namespace fap
