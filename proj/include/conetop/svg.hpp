#pragma once

#include <string>

#include "conetop/topology.hpp"

namespace conetop {

/// A 2-coordinate slice through (1+n)-space: membership is rasterized over
/// the (axis_u, axis_v) plane while the remaining coordinates stay fixed.
struct SlicePlane {
  int axis_u = 0;
  int axis_v = 1;
  Vec4 fixed{0.0, 0.0, 0.0, 0.0};  // values for coordinates off the plane
};

/// Raster rendering of a basic set as filled cells, with the light cone of
/// the center drawn as a reference curve when it cuts the plane.
std::string render_nbhd_svg(const BasicNbhd& b, const SlicePlane& plane, int resolution,
                            double span, const TolerancePolicy& tol);

}  // namespace conetop
