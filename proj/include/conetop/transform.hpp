#pragma once

#include <array>

#include "conetop/geometry.hpp"

namespace conetop {

/// Dense (1+3)x(1+3) matrix; transforms of lower-dimensional events pad the
/// unused block with the identity.
struct Mat4 {
  std::array<Vec4, 4> m{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

  static Mat4 identity() { return Mat4{}; }
  double operator()(int r, int c) const {
    return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  double& operator()(int r, int c) {
    return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  friend bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 matmul(const Mat4& a, const Mat4& b);
Mat4 transpose(const Mat4& a);
Vec4 matvec(const Mat4& a, const Vec4& x);

/// diag(1, -1, -1, -1); the padded block keeps the Lorentz check valid in
/// every spatial dimension.
Mat4 minkowski_eta();

/// True iff lambda^T eta lambda = eta entrywise within tol_abs.
bool is_lorentz(const Mat4& lambda, double tol_abs);

/// Lorentz boost with speed in (-1, 1) along a unit spatial direction.
Mat4 boost_matrix(int spatial_dim, const std::array<double, 3>& unit_dir, double speed);

/// Proper spatial rotation; for n = 2 the axis argument is ignored and the
/// rotation acts in the x-y plane, for n = 1 the result is the identity.
Mat4 spatial_rotation(int spatial_dim, const std::array<double, 3>& axis, double angle);

/// Homothety of Minkowski space: x |-> dilatation * (lorentz x) + translation.
struct GTransform {
  Mat4 lorentz = Mat4::identity();
  Vec4 translation{0.0, 0.0, 0.0, 0.0};
  double dilatation = 1.0;
  int n = 3;
};

GTransform identity_transform(int spatial_dim);
GTransform translation_transform(const Displacement& d);

/// Throws std::invalid_argument if the matrix is not Lorentz within
/// tol.tau_rel, the dilatation is not positive, or dimensions mismatch.
void validate_transform(const GTransform& g, const TolerancePolicy& tol);
Event apply_transform(const GTransform& g, const Event& x, const TolerancePolicy& tol = {});

/// Linear part only (no translation): d |-> dilatation * lorentz * d.
Displacement apply_linear(const GTransform& g, const Displacement& d, const TolerancePolicy& tol = {});

/// True when the Lorentz part leaves time untouched (pure spatial rotation).
bool is_spatial_rotation(const Mat4& lambda, double tol_abs);

}  // namespace conetop
