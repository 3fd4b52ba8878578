#pragma once

#include "fap/connectivity.hpp"
#include "fap/instance.hpp"

namespace fap {

enum class SegKind { Strong, Weak };

/*
 * Inclusion-maximal path whose interior vertices all have degree 2 in the
 * solution. vertices = v1..vk in path order, edges the k-1 edge ids between
 * them. End vertices have degree >= 3; a closed segment returns to its
 * origin (v1 == vk), which can only happen in TwoEC-feasible solutions.
 */
struct Segment {
  std::vector<int> vertices;
  std::vector<int> edges;
  SegKind kind = SegKind::Weak;
  bool special = false;
  bool closed = false;

  int length() const { return static_cast<int>(edges.size()); }
  bool trivial() const { return length() == 1; }
  int end1() const { return vertices.front(); }
  int end2() const { return vertices.back(); }
  // (v2, v_{k-1}); both ends of a trivial segment, one coinciding vertex
  // when length == 2
  std::pair<int, int> side_vertices() const {
    return {vertices[1], vertices[vertices.size() - 2]};
  }
  std::pair<int, int> side_edges() const { return {edges.front(), edges.back()}; }
};

std::vector<int> high_degree_vertices(const Solution& sol);  // degree >= 3

// Partition of the solution's edges into segments, ordered by smallest
// contained edge id. A solution with no high-degree vertex (a single cycle)
// has no segments.
std::vector<Segment> enumerate_segments(const Solution& sol);

// Fills kind and special. Strong: deleting the segment's edges and interior
// vertices leaves a feasible graph on the remaining vertices. Special:
// strong, length >= 2, every non-side edge zero-cost, at least one side
// edge unit-cost.
void classify_segments(const Solution& sol, Mode mode, std::vector<Segment>& segs);

std::vector<Segment> segments_of(const Solution& sol, Mode mode);

struct SegmentCensus {
  int total = 0, strong = 0, weak = 0, special = 0, trivial = 0, closed = 0;
  bool operator==(const SegmentCensus&) const = default;
};

SegmentCensus census_of(const std::vector<Segment>& segs);

}  // namespace fap
