#include "conetop/rng.hpp"

#include <cmath>

namespace conetop {

Event random_event(Rng& rng, int spatial_dim, double half_width) {
  Event e = origin(spatial_dim);
  for (int i = 0; i <= spatial_dim; ++i) {
    e.c[static_cast<std::size_t>(i)] = rng.uniform(-half_width, half_width);
  }
  return e;
}

std::array<double, 3> random_unit_spatial(Rng& rng, int spatial_dim) {
  while (true) {
    std::array<double, 3> d{0.0, 0.0, 0.0};
    double norm2 = 0.0;
    for (int i = 0; i < spatial_dim; ++i) {
      d[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0);
      norm2 += d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
    }
    if (norm2 > 0.01 && norm2 <= 1.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& x : d) x *= inv;
      return d;
    }
  }
}

GTransform random_g(Rng& rng, int spatial_dim) {
  const auto boost_dir = random_unit_spatial(rng, spatial_dim);
  const double speed = rng.uniform(0.0, 0.9);
  const auto rot_axis = random_unit_spatial(rng, spatial_dim);
  const double angle = rng.uniform(0.0, 2.0 * M_PI);

  GTransform g;
  g.n = spatial_dim;
  g.lorentz = matmul(boost_matrix(spatial_dim, boost_dir, speed),
                     spatial_rotation(spatial_dim, rot_axis, angle));
  g.dilatation = rng.uniform(0.5, 2.0);
  for (int i = 0; i <= spatial_dim; ++i) {
    g.translation[static_cast<std::size_t>(i)] = rng.uniform(-2.0, 2.0);
  }
  return g;
}

GTransform random_rotation_translation(Rng& rng, int spatial_dim) {
  const auto rot_axis = random_unit_spatial(rng, spatial_dim);
  const double angle = rng.uniform(0.0, 2.0 * M_PI);
  GTransform g;
  g.n = spatial_dim;
  g.lorentz = spatial_rotation(spatial_dim, rot_axis, angle);
  for (int i = 0; i <= spatial_dim; ++i) {
    g.translation[static_cast<std::size_t>(i)] = rng.uniform(-2.0, 2.0);
  }
  return g;
}

}  // namespace conetop
