#include "sfcurve/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sfc {

namespace {

struct Bounds {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
};

// planar picture of a model point: E2 identity, S2/H2 through the common
// rescaling of the light-cone lift
std::array<double, 2> picture(const DiscreteCurve& curve, int i) {
  const LCVector f = vertex_lift(curve, i);
  const double w = f[2] + f[3];
  return {f[0] / w, f[1] / w};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

const char* kPalette[] = {"#e66101", "#5e3c99", "#1b9e77", "#d95f02", "#7570b3", "#66a61e"};

}  // namespace

std::string render_svg(const std::vector<DiscreteCurve>& curves, const RenderOptions& options) {
  Bounds box;
  std::vector<std::vector<std::array<double, 2>>> polylines;
  for (const auto& curve : curves) {
    std::vector<std::array<double, 2>> line;
    for (int i = 0; i < curve.size(); ++i) {
      const auto p = picture(curve, i);
      box.add(p[0], p[1]);
      line.push_back(p);
    }
    if (curve.periodic && !line.empty()) line.push_back(line.front());
    polylines.push_back(std::move(line));
  }
  if (polylines.empty() || box.xmin > box.xmax) {
    throw Error(Errc::IOError, "nothing to render");
  }
  for (const auto& curve : curves) {
    if (curve.form == SpaceForm::Hyperbolic) {
      box.add(-1.0, -1.0);
      box.add(1.0, 1.0);
    }
  }

  const double spanx = std::max(box.xmax - box.xmin, 1e-6);
  const double spany = std::max(box.ymax - box.ymin, 1e-6);
  const double scale = (options.width - 2.0 * options.margin) / std::max(spanx, spany);
  const double height = spany * scale + 2.0 * options.margin;

  auto tx = [&](double x) { return options.margin + (x - box.xmin) * scale; };
  auto ty = [&](double y) { return height - options.margin - (y - box.ymin) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(options.width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(options.width) << " "
      << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // hyperbolic boundary circle
  for (const auto& curve : curves) {
    if (curve.form == SpaceForm::Hyperbolic) {
      svg << "<circle cx=\"" << fmt(tx(0.0)) << "\" cy=\"" << fmt(ty(0.0)) << "\" r=\""
          << fmt(scale) << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
      break;
    }
  }

  auto draw_lc_object = [&](const LCVector& v, const char* color, bool dashed) {
    IdentifyResult geo;
    try {
      geo = identify(v, 1e-6);
    } catch (const Error&) {
      return;
    }
    const char* dash = dashed ? " stroke-dasharray=\"6 4\"" : "";
    if (geo.kind == IdentifyResult::Kind::Circle) {
      svg << "<circle cx=\"" << fmt(tx(geo.x)) << "\" cy=\"" << fmt(ty(geo.y)) << "\" r=\""
          << fmt(std::abs(geo.r) * scale) << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1\"" << dash << "/>\n";
    } else if (geo.kind == IdentifyResult::Kind::Line) {
      // clip the line n.x = d to the bounding box by walking its direction
      const double dx = -geo.y, dy = geo.x;
      const double px = geo.x * geo.d, py = geo.y * geo.d;
      const double reach = 2.0 * std::max(spanx, spany);
      svg << "<line x1=\"" << fmt(tx(px - reach * dx)) << "\" y1=\"" << fmt(ty(py - reach * dy))
          << "\" x2=\"" << fmt(tx(px + reach * dx)) << "\" y2=\"" << fmt(ty(py + reach * dy))
          << "\" stroke=\"" << color << "\" stroke-width=\"1\"" << dash << "/>\n";
    }
  };

  for (size_t c = 0; c < curves.size(); ++c) {
    const auto& curve = curves[c];
    const bool highlight = curves.size() > 1 && (c == 0 || c + 1 == curves.size());
    const char* color = kPalette[c % 6];
    const double width = highlight ? 2.5 : 1.5;

    if (options.tangents) {
      for (int e = 0; e < curve.edge_count(); ++e) {
        draw_lc_object(tangent_lift(curve, e), "#bbbbbb", false);
      }
    }
    if (options.circles) {
      for (const int i : curve.interior_indices()) {
        draw_lc_object(double_curvature_circle(curve, i), "#9ecae1", false);
      }
    }

    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width)
        << "\" points=\"";
    for (const auto& p : polylines[c]) {
      svg << fmt(tx(p[0])) << "," << fmt(ty(p[1])) << " ";
    }
    svg << "\"/>\n";
    for (const auto& p : polylines[c]) {
      svg << "<circle cx=\"" << fmt(tx(p[0])) << "\" cy=\"" << fmt(ty(p[1])) << "\" r=\"2\" fill=\""
          << color << "\"/>\n";
    }
  }

  if (options.directrix) {
    for (const auto& curve : curves) {
      if (curve.form != SpaceForm::Euclidean) continue;
      try {
        const Directrix dir = euclidean_directrix(curve);
        if (dir.kind == Directrix::Kind::Line) {
          draw_lc_object(lift_line(dir.nx, dir.ny, dir.dist), "#444444", true);
        } else if (dir.kind == Directrix::Kind::Circle) {
          draw_lc_object(lift_circle(dir.cx, dir.cy, std::sqrt(dir.rho)), "#444444", true);
        }
        // imaginary-radius directrixes have no drawable carrier
      } catch (const Error&) {
        // non-elastic input: no directrix overlay
      }
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

void save_svg(const std::vector<DiscreteCurve>& curves, const RenderOptions& options,
              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IOError, "cannot open '" + path + "' for writing");
  out << render_svg(curves, options);
  if (!out) throw Error(Errc::IOError, "write to '" + path + "' failed");
}

}  // namespace sfc
