#include "fap/blocks.hpp"

#include <algorithm>

namespace fap {

namespace {

Block make_block(const Instance& inst, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  std::vector<int> verts;
  for (int id : edge_ids) {
    verts.push_back(inst.edge(id).u);
    verts.push_back(inst.edge(id).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local_of(inst.n(), -1);
  for (size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<int>(i);
  std::vector<Edge> local_edges;
  local_edges.reserve(edge_ids.size());
  for (int id : edge_ids) {
    const Edge& e = inst.edge(id);
    local_edges.push_back({local_of[e.u], local_of[e.v], e.cost});
  }
  return Block{Instance(static_cast<int>(verts.size()), std::move(local_edges)),
               std::move(verts), std::move(edge_ids)};
}

}  // namespace

std::vector<Block> blocks(const Instance& inst) {
  const int n = inst.n();
  const auto& adj = inst.adjacency();
  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  std::vector<size_t> iter(n, 0);
  std::vector<int> dfs_stack, edge_stack;
  std::vector<Block> result;
  int timer = 0;
  int seen_vertices = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (root > 0)
      throw FapError(ErrorKind::DisconnectedInput, "input graph is not connected");
    dfs_stack.push_back(root);
    disc[root] = low[root] = timer++;
    ++seen_vertices;
    while (!dfs_stack.empty()) {
      int v = dfs_stack.back();
      if (iter[v] < adj[v].size()) {
        auto [w, id] = adj[v][iter[v]++];
        if (id == parent_edge[v]) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(id);
          parent_edge[w] = id;
          disc[w] = low[w] = timer++;
          ++seen_vertices;
          dfs_stack.push_back(w);
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(id);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        dfs_stack.pop_back();
        if (dfs_stack.empty()) continue;
        int p = dfs_stack.back();
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          // edges above parent_edge[v] on the stack form one block
          std::vector<int> comp;
          while (!edge_stack.empty()) {
            int id = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(id);
            if (id == parent_edge[v]) break;
          }
          result.push_back(make_block(inst, std::move(comp)));
        }
      }
    }
  }
  if (seen_vertices != n)
    throw FapError(ErrorKind::DisconnectedInput, "input graph is not connected");
  std::sort(result.begin(), result.end(), [](const Block& a, const Block& b) {
    return a.edge_map.front() < b.edge_map.front();
  });
  return result;
}

}  // namespace fap
