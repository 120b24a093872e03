#include "conetop/svg.hpp"

#include <cmath>
#include <stdexcept>

#include "conetop/format.hpp"

namespace conetop {

std::string render_nbhd_svg(const BasicNbhd& b, const SlicePlane& plane, int resolution,
                            double span, const TolerancePolicy& tol) {
  const int dim = b.center.n;
  if (plane.axis_u < 0 || plane.axis_u > dim || plane.axis_v < 0 || plane.axis_v > dim ||
      plane.axis_u == plane.axis_v) {
    throw std::invalid_argument("plane axes must be two distinct coordinates in range");
  }
  if (resolution < 8 || resolution > 4096) {
    throw std::invalid_argument("resolution out of range");
  }
  if (!(span > 0.0)) throw std::invalid_argument("span must be positive");

  const double u0 = b.center.c[static_cast<std::size_t>(plane.axis_u)];
  const double v0 = b.center.c[static_cast<std::size_t>(plane.axis_v)];
  const double cell = 2.0 * span / static_cast<double>(resolution);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 " +
         std::to_string(resolution) + " " + std::to_string(resolution) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g fill=\"#2b6cb0\">\n";

  Event q = b.center;
  for (int row = 0; row < resolution; ++row) {
    // image rows run top-down; v runs bottom-up
    const double v = v0 + span - (static_cast<double>(row) + 0.5) * cell;
    q.c[static_cast<std::size_t>(plane.axis_v)] = v;
    for (int i = 0; i <= dim; ++i) {
      if (i != plane.axis_u && i != plane.axis_v) {
        q.c[static_cast<std::size_t>(i)] = plane.fixed[static_cast<std::size_t>(i)];
      }
    }
    int run_start = -1;
    for (int col = 0; col <= resolution; ++col) {
      bool inside = false;
      if (col < resolution) {
        const double u = u0 - span + (static_cast<double>(col) + 0.5) * cell;
        q.c[static_cast<std::size_t>(plane.axis_u)] = u;
        inside = member(b, q, tol);
      }
      if (inside && run_start < 0) run_start = col;
      if (!inside && run_start >= 0) {
        out += "<rect x=\"" + std::to_string(run_start) + "\" y=\"" + std::to_string(row) +
               "\" width=\"" + std::to_string(col - run_start) + "\" height=\"1\"/>\n";
        run_start = -1;
      }
    }
  }
  out += "</g>\n";

  // Light cone of the center as a reference curve in plot coordinates.
  auto px = [&](double u) { return (u - (u0 - span)) / cell; };
  auto py = [&](double v) { return ((v0 + span) - v) / cell; };
  const bool has_time = plane.axis_u == 0 || plane.axis_v == 0;
  if (b.kind != TopologyKind::Alexandrov && has_time) {
    // t - t0 = +-(u - u0) appears as the two diagonals through the center.
    const double c_u = px(u0), c_v = py(v0);
    const double r = static_cast<double>(resolution);
    for (double slope : {1.0, -1.0}) {
      out += "<line x1=\"" + fmt_double(c_u - r) + "\" y1=\"" + fmt_double(c_v + slope * r) +
             "\" x2=\"" + fmt_double(c_u + r) + "\" y2=\"" + fmt_double(c_v - slope * r) +
             "\" stroke=\"#c53030\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
  } else if (b.kind != TopologyKind::Alexandrov) {
    // Purely spatial slice: the cone cuts a circle of radius |t_fixed - t0|.
    const double radius = std::abs(plane.fixed[0] - b.center.c[0]);
    if (radius > 0.0) {
      out += "<circle cx=\"" + fmt_double(px(u0)) + "\" cy=\"" + fmt_double(py(v0)) +
             "\" r=\"" + fmt_double(radius / cell) +
             "\" fill=\"none\" stroke=\"#c53030\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace conetop
