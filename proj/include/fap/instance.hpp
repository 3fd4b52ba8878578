#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fap {

enum class ErrorKind {
  MalformedLine,
  DuplicateEdge,
  SelfLoop,
  ZeroEdgesNotForest,
  NonContiguousIds,
  DisconnectedInput,
  BridgeInInput,
  InfeasibleInput,
  TooLarge,
  Infeasible,
  ParamsInvalid,
  MalformedSet,
  PreconditionUnmet,
  TraceMismatch,
};

const char* error_kind_name(ErrorKind k);

struct FapError : std::runtime_error {
  ErrorKind kind;
  FapError(ErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

struct Edge {
  int u = -1;
  int v = -1;
  int cost = 1;  // 0 or 1
};

/*
 * Undirected simple graph with {0,1} edge costs. Construction validates:
 * endpoints in range, no self loops, no duplicate edges (either orientation),
 * costs in {0,1}, and the zero-cost edges forming a forest. Edge ids are the
 * positions in the edge list and define the scan order used everywhere.
 */
class Instance {
 public:
  Instance(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int zero_edge_count() const { return zero_count_; }
  int unit_edge_count() const { return m() - zero_count_; }

  // adjacency()[v] = (neighbor, edge id), in edge-id order
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const {
    return adj_;
  }

  // -1 when (u,v) is not an edge
  int find_edge(int u, int v) const;

 private:
  int n_ = 0;
  int zero_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Text format: first non-comment line "n m", then m lines "u v c".
// '#' starts a comment; blank lines ignored.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

/*
 * Edge subset of one instance. Cost counts unit member edges only; zero-cost
 * members are free. The referenced instance must outlive the solution.
 */
class Solution {
 public:
  explicit Solution(const Instance& inst, bool all_edges = false);

  const Instance& instance() const { return *inst_; }
  bool contains(int edge_id) const { return mask_[edge_id] != 0; }
  void insert(int edge_id);
  void erase(int edge_id);
  int cost() const { return cost_; }
  int size() const { return size_; }
  const std::vector<uint8_t>& mask() const { return mask_; }
  std::vector<int> edge_ids() const;  // ascending

  bool operator==(const Solution& other) const {
    return inst_ == other.inst_ && mask_ == other.mask_;
  }

 private:
  const Instance* inst_;
  std::vector<uint8_t> mask_;
  int cost_ = 0;
  int size_ = 0;
};

}  // namespace fap
