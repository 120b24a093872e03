#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace conetop {

using Vec4 = std::array<double, 4>;

/// A point of (1+n)-dimensional Minkowski space, n in {1,2,3}.
/// Coordinate 0 is time. Unused spatial slots stay exactly zero so that
/// comparisons and norms never read garbage.
struct Event {
  Vec4 c{0.0, 0.0, 0.0, 0.0};
  int n = 3;

  double t() const { return c[0]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Event&, const Event&) = default;
};

/// Validates finiteness and 1 <= n <= 3; throws std::invalid_argument.
Event make_event(std::span<const double> coords);
Event make_event(std::initializer_list<double> coords);
Event origin(int spatial_dim);
std::string format_event(const Event& e);

/// Coordinate difference y - x between events of the same dimension.
struct Displacement {
  Vec4 v{0.0, 0.0, 0.0, 0.0};
  int n = 3;

  double t() const { return v[0]; }
  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  bool zero() const {
    return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0 && v[3] == 0.0;
  }
  double norm2() const {
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
  }
  double norm() const;
};

Displacement operator-(const Event& y, const Event& x);
Displacement make_displacement(std::span<const double> comps);
Displacement make_displacement(std::initializer_list<double> comps);
Event translate(const Event& x, const Displacement& d);
Displacement scaled(const Displacement& d, double factor);

/// The Minkowski quadratic form v_t^2 - |v_spatial|^2.
double quadratic_form(const Displacement& d);

/// Relative tolerance turning the exact cone classification into a banded
/// one: |Q(v)| <= tau_rel * max(1, |v|^2) counts as null.
struct TolerancePolicy {
  double tau_rel = 1e-9;

  double scale(const Displacement& d) const;
  double band(const Displacement& d) const;
};

enum class CausalClass : std::uint8_t {
  Equal,
  ChronoFuture,
  ChronoPast,
  HorismosFuture,
  HorismosPast,
  Spacelike,
};

const char* to_string(CausalClass c);
CausalClass time_reverse(CausalClass c);

/// Banded classification of the ordered pair (x, y). Exact coordinate
/// equality is checked before the band test, so the zero displacement is
/// Equal rather than null. A displacement with zero time component that
/// still lands inside the band is Spacelike (the exact-arithmetic truth).
CausalClass classify(const Event& x, const Event& y, const TolerancePolicy& tol);
CausalClass classify(const Displacement& d, const TolerancePolicy& tol);

bool is_chrono(CausalClass c);
bool is_horismos(CausalClass c);
bool is_causal(CausalClass c);  // chrono or horismos, either direction

double euclidean_distance(const Event& a, const Event& b);

}  // namespace conetop
