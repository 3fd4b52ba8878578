#include "fap/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fap {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::ZeroEdgesNotForest: return "ZeroEdgesNotForest";
    case ErrorKind::NonContiguousIds: return "NonContiguousIds";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::BridgeInInput: return "BridgeInInput";
    case ErrorKind::InfeasibleInput: return "InfeasibleInput";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::ParamsInvalid: return "ParamsInvalid";
    case ErrorKind::MalformedSet: return "MalformedSet";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
  }
  return "Unknown";
}

namespace {

// union-find over vertex ids, used to reject cyclic zero-cost sets
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Instance::Instance(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1)
    throw FapError(ErrorKind::MalformedLine, "vertex count must be positive");
  Dsu zero_forest(n_);
  std::vector<std::vector<std::pair<int, int>>> seen(n_);
  adj_.assign(n_, {});
  for (int id = 0; id < m(); ++id) {
    Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw FapError(ErrorKind::NonContiguousIds,
                     "edge " + std::to_string(id) + " references a vertex outside 0.." +
                         std::to_string(n_ - 1));
    if (e.u == e.v)
      throw FapError(ErrorKind::SelfLoop, "edge " + std::to_string(id) + " is a self loop");
    if (e.cost != 0 && e.cost != 1)
      throw FapError(ErrorKind::MalformedLine,
                     "edge " + std::to_string(id) + " has cost outside {0,1}");
    for (auto [w, other] : seen[e.u])
      if (w == e.v)
        throw FapError(ErrorKind::DuplicateEdge,
                       "edges " + std::to_string(other) + " and " + std::to_string(id) +
                           " join the same vertices");
    seen[e.u].push_back({e.v, id});
    seen[e.v].push_back({e.u, id});
    if (e.cost == 0) {
      ++zero_count_;
      if (!zero_forest.unite(e.u, e.v))
        throw FapError(ErrorKind::ZeroEdgesNotForest,
                       "zero-cost edges contain a cycle (edge " + std::to_string(id) + ")");
    }
    adj_[e.u].push_back({e.v, id});
    adj_[e.v].push_back({e.u, id});
  }
}

int Instance::find_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  for (auto [w, id] : adj_[u])
    if (w == v) return id;
  return -1;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw FapError(ErrorKind::MalformedLine,
                   "line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) {
        std::string tok;
        std::istringstream probe(line);
        if (!(probe >> tok)) { n = -1; continue; }  // blank line
        fail("expected header 'n m'");
      }
      if (n < 1 || m < 0) fail("header values out of range");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after header");
      continue;
    }
    Edge e;
    if (!(ls >> e.u >> e.v >> e.cost)) {
      std::string tok;
      std::istringstream probe(line);
      if (!(probe >> tok)) continue;  // blank line
      fail("expected edge 'u v c'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens after edge");
    edges.push_back(e);
  }
  if (n < 0) throw FapError(ErrorKind::MalformedLine, "empty instance text");
  if (static_cast<int>(edges.size()) != m)
    throw FapError(ErrorKind::MalformedLine,
                   "header announced " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
  return Instance(n, std::move(edges));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.n() << ' ' << inst.m() << '\n';
  for (const Edge& e : inst.edges()) out << e.u << ' ' << e.v << ' ' << e.cost << '\n';
  return out.str();
}

Solution::Solution(const Instance& inst, bool all_edges)
    : inst_(&inst), mask_(inst.m(), all_edges ? 1 : 0) {
  if (all_edges) {
    size_ = inst.m();
    cost_ = inst.unit_edge_count();
  }
}

void Solution::insert(int edge_id) {
  if (mask_[edge_id]) return;
  mask_[edge_id] = 1;
  ++size_;
  cost_ += inst_->edge(edge_id).cost;
}

void Solution::erase(int edge_id) {
  if (!mask_[edge_id]) return;
  mask_[edge_id] = 0;
  --size_;
  cost_ -= inst_->edge(edge_id).cost;
}

std::vector<int> Solution::edge_ids() const {
  std::vector<int> ids;
  ids.reserve(size_);
  for (int id = 0; id < inst_->m(); ++id)
    if (mask_[id]) ids.push_back(id);
  return ids;
}

}  // namespace fap
