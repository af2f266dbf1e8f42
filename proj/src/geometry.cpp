#include "extremalkit/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "extremalkit/errors.hpp"
#include "extremalkit/parallel.hpp"

namespace exk {

int orientation(const Point& p, const Point& q, const Point& r) {
  Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  if (cross > 0) return 1;
  if (cross < 0) return -1;
  return 0;
}

bool segments_properly_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  int o1 = orientation(a1, a2, b1);
  int o2 = orientation(a1, a2, b2);
  if (o1 * o2 >= 0) return false;
  int o3 = orientation(b1, b2, a1);
  int o4 = orientation(b1, b2, a2);
  return o3 * o4 < 0;
}

Point crossing_point(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  if (!segments_properly_cross(a1, a2, b1, b2))
    throw std::invalid_argument("crossing_point requires properly crossing segments");
  Rat dax = a2.x - a1.x, day = a2.y - a1.y;
  Rat dbx = b2.x - b1.x, dby = b2.y - b1.y;
  Rat denom = dax * dby - day * dbx;  // nonzero: the segments are not parallel
  Rat t = ((b1.x - a1.x) * dby - (b1.y - a1.y) * dbx) / denom;
  return {a1.x + t * dax, a1.y + t * day};
}

namespace {

std::string edge_text(std::pair<int, int> e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Strictly between the endpoints of a segment it is collinear with.
bool strictly_inside(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  Rat dot_a = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  Rat dot_b = (p.x - b.x) * (a.x - b.x) + (p.y - b.y) * (a.y - b.y);
  return dot_a > 0 && dot_b > 0;
}

void check_shape(const Drawing& d) {
  if (static_cast<int>(d.positions.size()) != d.graph.vertex_count())
    throw std::invalid_argument("drawing must place every vertex exactly once");
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::DuplicatePosition: {
      out << "vertices";
      for (int v : vertices) out << ' ' << v;
      out << " share one position";
      break;
    }
    case Kind::VertexOnEdge:
      out << "vertex " << vertices.front() << " lies in the interior of edge " << edge_text(edges.front());
      break;
    case Kind::ConcurrentCrossings: {
      out << "edges";
      for (auto e : edges) out << ' ' << edge_text(e);
      out << " pass through a common interior point";
      break;
    }
    case Kind::OverlappingEdges:
      out << "edges " << edge_text(edges.front()) << " and " << edge_text(edges.back())
          << " overlap along a segment";
      break;
  }
  return out.str();
}

LegalityReport is_legal(const Drawing& d) {
  check_shape(d);
  LegalityReport report;
  const auto& pos = d.positions;
  const int n = d.graph.vertex_count();
  const auto edge_list = d.graph.edges();

  std::map<Point, std::vector<int>> by_point;
  for (int v = 0; v < n; ++v) by_point[pos[static_cast<std::size_t>(v)]].push_back(v);
  for (const auto& [point, vertices] : by_point)
    if (vertices.size() > 1)
      report.violations.push_back({Violation::Kind::DuplicatePosition, vertices, {}});

  for (auto e : edge_list) {
    const Point& a = pos[static_cast<std::size_t>(e.first)];
    const Point& b = pos[static_cast<std::size_t>(e.second)];
    for (int w = 0; w < n; ++w) {
      if (w == e.first || w == e.second) continue;
      if (strictly_inside(pos[static_cast<std::size_t>(w)], a, b))
        report.violations.push_back({Violation::Kind::VertexOnEdge, {w}, {e}});
    }
  }

  std::map<Point, std::set<std::pair<int, int>>> edges_through;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const Point& a1 = pos[static_cast<std::size_t>(edge_list[i].first)];
    const Point& a2 = pos[static_cast<std::size_t>(edge_list[i].second)];
    for (std::size_t j = i + 1; j < edge_list.size(); ++j) {
      const Point& b1 = pos[static_cast<std::size_t>(edge_list[j].first)];
      const Point& b2 = pos[static_cast<std::size_t>(edge_list[j].second)];
      if (orientation(a1, a2, b1) == 0 && orientation(a1, a2, b2) == 0) {
        // Collinear pair: flag any positive-length shared stretch.
        Point alo = std::min(a1, a2), ahi = std::max(a1, a2);
        Point blo = std::min(b1, b2), bhi = std::max(b1, b2);
        if (std::max(alo, blo) < std::min(ahi, bhi))
          report.violations.push_back(
              {Violation::Kind::OverlappingEdges, {}, {edge_list[i], edge_list[j]}});
      } else if (segments_properly_cross(a1, a2, b1, b2)) {
        auto& through = edges_through[crossing_point(a1, a2, b1, b2)];
        through.insert(edge_list[i]);
        through.insert(edge_list[j]);
      }
    }
  }
  for (const auto& [point, through] : edges_through)
    if (through.size() >= 3)
      report.violations.push_back({Violation::Kind::ConcurrentCrossings,
                                   {},
                                   std::vector<std::pair<int, int>>(through.begin(), through.end())});

  report.legal = report.violations.empty();
  return report;
}

std::int64_t count_crossings_unchecked(const Drawing& d, bool parallel) {
  check_shape(d);
  const auto edge_list = d.graph.edges();
  const auto& pos = d.positions;
  const std::int64_t m = static_cast<std::int64_t>(edge_list.size());
  std::int64_t total = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total) \
    num_threads(parallel ? max_threads() : 1)
  for (std::int64_t i = 0; i < m; ++i) {
    auto e = edge_list[static_cast<std::size_t>(i)];
    const Point& a1 = pos[static_cast<std::size_t>(e.first)];
    const Point& a2 = pos[static_cast<std::size_t>(e.second)];
    for (std::int64_t j = i + 1; j < m; ++j) {
      auto f = edge_list[static_cast<std::size_t>(j)];
      if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
        continue;  // adjacent pairs cannot properly cross
      if (segments_properly_cross(a1, a2, pos[static_cast<std::size_t>(f.first)],
                                  pos[static_cast<std::size_t>(f.second)]))
        ++total;
    }
  }
  return total;
}

namespace {

void require_legal(const Drawing& d) {
  LegalityReport report = is_legal(d);
  if (!report.legal)
    throw IllegalDrawingError("illegal drawing: " + report.violations.front().describe());
}

}  // namespace

std::int64_t crossing_count(const Drawing& d) {
  require_legal(d);
  return count_crossings_unchecked(d, true);
}

std::int64_t crossing_count_serial(const Drawing& d) {
  require_legal(d);
  return count_crossings_unchecked(d, false);
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> missed_nontrivial_crossings(
    const Drawing& d) {
  require_legal(d);
  const auto edge_list = d.graph.edges();
  const auto& pos = d.positions;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> missed;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    auto e = edge_list[i];
    for (std::size_t j = i + 1; j < edge_list.size(); ++j) {
      auto f = edge_list[j];
      if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
        continue;
      if (!segments_properly_cross(pos[static_cast<std::size_t>(e.first)],
                                   pos[static_cast<std::size_t>(e.second)],
                                   pos[static_cast<std::size_t>(f.first)],
                                   pos[static_cast<std::size_t>(f.second)]))
        missed.emplace_back(e, f);
    }
  }
  return missed;
}

}  // namespace exk
