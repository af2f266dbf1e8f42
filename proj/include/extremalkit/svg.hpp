#pragma once

#include <string>

#include "extremalkit/geometry.hpp"

namespace exk {

struct SvgOptions {
  double scale = 60.0;         // drawing units to pixels
  double max_size = 1200.0;    // cap on the longer canvas side; shrinks scale to fit
  double margin = 40.0;
  bool label_vertices = true;
  bool mark_crossings = true;  // red dots at the exact crossing points
};

// Standalone SVG document for a drawing. Coordinates are rendered as decimals
// with enough digits to keep the combinatorial picture; rendering only, never
// fed back into any computation.
std::string export_svg(const Drawing& d, const SvgOptions& options = {});

}  // namespace exk
