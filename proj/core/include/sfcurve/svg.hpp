#pragma once

#include <string>
#include <vector>

#include "sfcurve/curve.hpp"
#include "sfcurve/elastic.hpp"

namespace sfc {

/// SVG rendering of curves in the planar picture: E2 directly, H2 in the
/// Poincare disc, S2 under stereographic projection. Overlays use the
/// light-cone lifts, which read as the drawn Euclidean objects in all
/// three cases.
struct RenderOptions {
  bool tangents = false;
  bool circles = false;           // double-curvature circles
  bool directrix = false;         // needs a Euclidean constrained elastic curve
  double width = 640.0;
  double margin = 24.0;
};

std::string render_svg(const std::vector<DiscreteCurve>& curves, const RenderOptions& options);

void save_svg(const std::vector<DiscreteCurve>& curves, const RenderOptions& options,
              const std::string& path);

}  // namespace sfc
