#include "extremalkit/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

namespace exk {
namespace {

double as_double(const Rat& r) { return r.get_d(); }

}  // namespace

std::string export_svg(const Drawing& d, const SvgOptions& options) {
  const int n = d.graph.vertex_count();
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  std::vector<std::pair<double, double>> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (const Point& p : d.positions) raw.emplace_back(as_double(p.x), as_double(p.y));
  if (!raw.empty()) {
    min_x = max_x = raw.front().first;
    min_y = max_y = raw.front().second;
    for (auto [x, y] : raw) {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  if (max_x - min_x < 1e-9) max_x = min_x + 1;
  if (max_y - min_y < 1e-9) max_y = min_y + 1;

  double scale = options.scale;
  const double span = std::max(max_x - min_x, max_y - min_y);
  if (span * scale > options.max_size) scale = options.max_size / span;

  const double width = (max_x - min_x) * scale + 2 * options.margin;
  const double height = (max_y - min_y) * scale + 2 * options.margin;
  auto px = [&](double x) { return (x - min_x) * scale + options.margin; };
  auto py = [&](double y) { return height - ((y - min_y) * scale + options.margin); };

  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto edge_list = d.graph.edges();
  out << "  <g stroke=\"#345086\" stroke-width=\"1.5\">\n";
  for (auto [u, v] : edge_list) {
    auto [ux, uy] = raw[static_cast<std::size_t>(u)];
    auto [vx, vy] = raw[static_cast<std::size_t>(v)];
    out << "    <line x1=\"" << px(ux) << "\" y1=\"" << py(uy) << "\" x2=\"" << px(vx) << "\" y2=\""
        << py(vy) << "\"/>\n";
  }
  out << "  </g>\n";

  if (options.mark_crossings) {
    out << "  <g fill=\"#c0392b\">\n";
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
      auto e = edge_list[i];
      for (std::size_t j = i + 1; j < edge_list.size(); ++j) {
        auto f = edge_list[j];
        if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
          continue;
        const Point& a1 = d.positions[static_cast<std::size_t>(e.first)];
        const Point& a2 = d.positions[static_cast<std::size_t>(e.second)];
        const Point& b1 = d.positions[static_cast<std::size_t>(f.first)];
        const Point& b2 = d.positions[static_cast<std::size_t>(f.second)];
        if (!segments_properly_cross(a1, a2, b1, b2)) continue;
        Point c = crossing_point(a1, a2, b1, b2);
        out << "    <circle class=\"crossing\" cx=\"" << px(as_double(c.x)) << "\" cy=\""
            << py(as_double(c.y)) << "\" r=\"2.2\"/>\n";
      }
    }
    out << "  </g>\n";
  }

  for (int v = 0; v < n; ++v) {
    auto [x, y] = raw[static_cast<std::size_t>(v)];
    out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y)
        << "\" r=\"4\" fill=\"#20324e\" stroke=\"white\" stroke-width=\"1\"/>\n";
    if (options.label_vertices)
      out << "  <text x=\"" << px(x) + 6 << "\" y=\"" << py(y) - 6
          << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#20324e\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace exk
