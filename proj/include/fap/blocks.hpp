#pragma once

#include "fap/instance.hpp"

namespace fap {

// One biconnected component, renumbered to local contiguous vertex ids.
// Local edge ids ascend with the original edge ids they map to, so scan
// order is preserved under the mapping.
struct Block {
  Instance inst;
  std::vector<int> vertex_map;  // local vertex -> original vertex
  std::vector<int> edge_map;    // local edge -> original edge
};

// Biconnected components of the instance. Bridges come back as 2-vertex
// blocks. Throws DisconnectedInput when the graph does not connect all n
// vertices. Blocks are ordered by smallest original edge id.
std::vector<Block> blocks(const Instance& inst);

}  // namespace fap
