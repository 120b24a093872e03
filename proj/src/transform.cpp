#include "conetop/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace conetop {

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

Mat4 transpose(const Mat4& a) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = a(c, r);
  return out;
}

Vec4 matvec(const Mat4& a, const Vec4& x) {
  Vec4 out{0, 0, 0, 0};
  for (int r = 0; r < 4; ++r) {
    double acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += a(r, c) * x[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

Mat4 minkowski_eta() {
  Mat4 eta;
  eta(0, 0) = 1.0;
  eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
  return eta;
}

bool is_lorentz(const Mat4& lambda, double tol_abs) {
  const Mat4 g = matmul(transpose(lambda), matmul(minkowski_eta(), lambda));
  const Mat4 eta = minkowski_eta();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (std::abs(g(r, c) - eta(r, c)) > tol_abs) return false;
    }
  }
  return true;
}

Mat4 boost_matrix(int spatial_dim, const std::array<double, 3>& unit_dir, double speed) {
  if (std::abs(speed) >= 1.0) {
    throw std::invalid_argument("boost speed must satisfy |v| < 1");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - speed * speed);
  Mat4 out;
  out(0, 0) = gamma;
  for (int i = 0; i < spatial_dim; ++i) {
    const double ni = unit_dir[static_cast<std::size_t>(i)];
    out(0, i + 1) = -gamma * speed * ni;
    out(i + 1, 0) = -gamma * speed * ni;
    for (int j = 0; j < spatial_dim; ++j) {
      const double nj = unit_dir[static_cast<std::size_t>(j)];
      out(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (gamma - 1.0) * ni * nj;
    }
  }
  return out;
}

Mat4 spatial_rotation(int spatial_dim, const std::array<double, 3>& axis, double angle) {
  Mat4 out;
  if (spatial_dim == 1) return out;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  if (spatial_dim == 2) {
    out(1, 1) = c;
    out(1, 2) = -s;
    out(2, 1) = s;
    out(2, 2) = c;
    return out;
  }
  // Rodrigues rotation about a unit axis.
  const double ux = axis[0], uy = axis[1], uz = axis[2];
  const double omc = 1.0 - c;
  out(1, 1) = c + ux * ux * omc;
  out(1, 2) = ux * uy * omc - uz * s;
  out(1, 3) = ux * uz * omc + uy * s;
  out(2, 1) = uy * ux * omc + uz * s;
  out(2, 2) = c + uy * uy * omc;
  out(2, 3) = uy * uz * omc - ux * s;
  out(3, 1) = uz * ux * omc - uy * s;
  out(3, 2) = uz * uy * omc + ux * s;
  out(3, 3) = c + uz * uz * omc;
  return out;
}

GTransform identity_transform(int spatial_dim) {
  GTransform g;
  g.n = spatial_dim;
  return g;
}

GTransform translation_transform(const Displacement& d) {
  GTransform g;
  g.n = d.n;
  g.translation = d.v;
  return g;
}

void validate_transform(const GTransform& g, const TolerancePolicy& tol) {
  if (g.n < 1 || g.n > 3) {
    throw std::invalid_argument("transform dimension must be 1, 2 or 3");
  }
  if (!(g.dilatation > 0.0) || !std::isfinite(g.dilatation)) {
    throw std::invalid_argument("dilatation must be a positive real");
  }
  if (!is_lorentz(g.lorentz, tol.tau_rel)) {
    throw std::invalid_argument("matrix is not Lorentz within tolerance");
  }
}

Event apply_transform(const GTransform& g, const Event& x, const TolerancePolicy& tol) {
  validate_transform(g, tol);
  if (g.n != x.n) {
    throw std::invalid_argument("dimension mismatch between transform and event");
  }
  const Vec4 rotated = matvec(g.lorentz, x.c);
  Event out;
  out.n = x.n;
  for (std::size_t i = 0; i < 4; ++i) {
    out.c[i] = g.dilatation * rotated[i] + g.translation[i];
  }
  return out;
}

Displacement apply_linear(const GTransform& g, const Displacement& d, const TolerancePolicy& tol) {
  validate_transform(g, tol);
  if (g.n != d.n) {
    throw std::invalid_argument("dimension mismatch between transform and displacement");
  }
  const Vec4 rotated = matvec(g.lorentz, d.v);
  Displacement out;
  out.n = d.n;
  for (std::size_t i = 0; i < 4; ++i) out.v[i] = g.dilatation * rotated[i];
  return out;
}

bool is_spatial_rotation(const Mat4& lambda, double tol_abs) {
  if (std::abs(lambda(0, 0) - 1.0) > tol_abs) return false;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(lambda(0, i)) > tol_abs) return false;
    if (std::abs(lambda(i, 0)) > tol_abs) return false;
  }
  return is_lorentz(lambda, tol_abs);
}

}  // namespace conetop
