#pragma once

#include <cstdint>
#include <random>

#include "conetop/geometry.hpp"
#include "conetop/transform.hpp"

namespace conetop {

/// mt19937_64 with a hand-rolled double conversion, so streams are
/// bit-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Inclusive bounds.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

Event random_event(Rng& rng, int spatial_dim, double half_width = 2.0);

/// Random unit spatial direction (rejection sampling in the cube).
std::array<double, 3> random_unit_spatial(Rng& rng, int spatial_dim);

/// Boost with |v| <= 0.9, a proper rotation, dilatation in [0.5, 2] and a
/// translation in [-2, 2]^(1+n).
GTransform random_g(Rng& rng, int spatial_dim);

/// Rotation + translation only (no boost, no dilatation).
GTransform random_rotation_translation(Rng& rng, int spatial_dim);

}  // namespace conetop
