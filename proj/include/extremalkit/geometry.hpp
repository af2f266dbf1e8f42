// Exact rational plane geometry for rectilinear drawings: crossing
// predicates, the legality rules, and crossing counting.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extremalkit/graph.hpp"
#include "extremalkit/rat.hpp"

namespace exk {

struct Point {
  Rat x, y;

  bool operator==(const Point& other) const { return x == other.x && y == other.y; }
  bool operator<(const Point& other) const {
    return x < other.x || (x == other.x && y < other.y);
  }
};

// Straight-line drawing: every vertex placed, positions pairwise distinct.
struct Drawing {
  Graph graph;
  std::vector<Point> positions;  // indexed by vertex
};

// Sign of the cross product (q - p) x (r - p): +1 counterclockwise, 0
// collinear, -1 clockwise. Exact.
int orientation(const Point& p, const Point& q, const Point& r);

// True iff the open segments meet in exactly one interior point (strict
// orientation tests both ways). Shared endpoints and collinear contact never
// count.
bool segments_properly_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

// Intersection point of two properly crossing segments, as exact rationals.
Point crossing_point(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

struct Violation {
  enum class Kind {
    DuplicatePosition,    // two vertices share a point
    VertexOnEdge,         // vertex interior to a non-incident edge
    ConcurrentCrossings,  // >= 3 edges through one interior point
    OverlappingEdges,     // collinear segments with a shared stretch
  };
  Kind kind;
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::string describe() const;
};

struct LegalityReport {
  bool legal = true;
  std::vector<Violation> violations;
};

// A drawing is legal when positions are distinct, no edge passes through a
// vertex it is not incident with, and no interior point lies on three or more
// edges. Crossing points are compared as exact rationals.
LegalityReport is_legal(const Drawing& d);

// Number of unordered edge pairs that properly cross. Adjacent pairs never
// cross in a legal drawing and are never counted. Throws IllegalDrawingError
// on an illegal drawing. The default entry point spreads the O(m^2) pair scan
// across OpenMP workers; the serial variant is the reference the tests
// compare against.
std::int64_t crossing_count(const Drawing& d);
std::int64_t crossing_count_serial(const Drawing& d);

// The bare pair scan with no legality gate; callers must have validated the
// drawing themselves (crossing_count above does).
std::int64_t count_crossings_unchecked(const Drawing& d, bool parallel);

// All nonadjacent edge pairs that fail to cross; together with the crossing
// count they exhaust the thrackle bound:
//   crossing_count + |missed| = thrackle_bound(graph).
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> missed_nontrivial_crossings(
    const Drawing& d);

}  // namespace exk
