#include "conetop/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "conetop/format.hpp"

namespace conetop {

namespace {

void check_dim(int n) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument("spatial dimension must be 1, 2 or 3");
  }
}

void check_finite(std::span<const double> values) {
  for (double x : values) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("coordinates must be finite");
    }
  }
}

}  // namespace

Event make_event(std::span<const double> coords) {
  const int n = static_cast<int>(coords.size()) - 1;
  check_dim(n);
  check_finite(coords);
  Event e;
  e.n = n;
  for (std::size_t i = 0; i < coords.size(); ++i) e.c[i] = coords[i];
  return e;
}

Event make_event(std::initializer_list<double> coords) {
  return make_event(std::span<const double>(coords.begin(), coords.size()));
}

Event origin(int spatial_dim) {
  check_dim(spatial_dim);
  Event e;
  e.n = spatial_dim;
  return e;
}

std::string format_event(const Event& e) {
  std::string out = "(";
  for (int i = 0; i <= e.n; ++i) {
    if (i) out += ",";
    out += fmt_double(e.c[static_cast<std::size_t>(i)]);
  }
  out += ")";
  return out;
}

double Displacement::norm() const { return std::sqrt(norm2()); }

Displacement operator-(const Event& y, const Event& x) {
  if (y.n != x.n) {
    throw std::invalid_argument("dimension mismatch between events");
  }
  Displacement d;
  d.n = x.n;
  for (int i = 0; i < 4; ++i) {
    d.v[static_cast<std::size_t>(i)] =
        y.c[static_cast<std::size_t>(i)] - x.c[static_cast<std::size_t>(i)];
  }
  return d;
}

Displacement make_displacement(std::span<const double> comps) {
  const int n = static_cast<int>(comps.size()) - 1;
  check_dim(n);
  check_finite(comps);
  Displacement d;
  d.n = n;
  for (std::size_t i = 0; i < comps.size(); ++i) d.v[i] = comps[i];
  return d;
}

Displacement make_displacement(std::initializer_list<double> comps) {
  return make_displacement(std::span<const double>(comps.begin(), comps.size()));
}

Event translate(const Event& x, const Displacement& d) {
  if (x.n != d.n) {
    throw std::invalid_argument("dimension mismatch between event and displacement");
  }
  Event e = x;
  for (int i = 0; i < 4; ++i) {
    e.c[static_cast<std::size_t>(i)] += d.v[static_cast<std::size_t>(i)];
  }
  return e;
}

Displacement scaled(const Displacement& d, double factor) {
  Displacement out = d;
  for (auto& x : out.v) x *= factor;
  return out;
}

double quadratic_form(const Displacement& d) {
  return d.v[0] * d.v[0] - (d.v[1] * d.v[1] + d.v[2] * d.v[2] + d.v[3] * d.v[3]);
}

double TolerancePolicy::scale(const Displacement& d) const {
  return std::max(1.0, d.norm2());
}

double TolerancePolicy::band(const Displacement& d) const {
  return tau_rel * scale(d);
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Equal: return "Equal";
    case CausalClass::ChronoFuture: return "ChronoFuture";
    case CausalClass::ChronoPast: return "ChronoPast";
    case CausalClass::HorismosFuture: return "HorismosFuture";
    case CausalClass::HorismosPast: return "HorismosPast";
    case CausalClass::Spacelike: return "Spacelike";
  }
  return "Unknown";
}

CausalClass time_reverse(CausalClass c) {
  switch (c) {
    case CausalClass::ChronoFuture: return CausalClass::ChronoPast;
    case CausalClass::ChronoPast: return CausalClass::ChronoFuture;
    case CausalClass::HorismosFuture: return CausalClass::HorismosPast;
    case CausalClass::HorismosPast: return CausalClass::HorismosFuture;
    default: return c;
  }
}

CausalClass classify(const Displacement& d, const TolerancePolicy& tol) {
  if (d.zero()) return CausalClass::Equal;
  const double q = quadratic_form(d);
  const double band = tol.band(d);
  if (q > band) {
    return d.t() > 0.0 ? CausalClass::ChronoFuture : CausalClass::ChronoPast;
  }
  if (q < -band) return CausalClass::Spacelike;
  if (d.t() > 0.0) return CausalClass::HorismosFuture;
  if (d.t() < 0.0) return CausalClass::HorismosPast;
  return CausalClass::Spacelike;  // zero time offset: exactly spacelike
}

CausalClass classify(const Event& x, const Event& y, const TolerancePolicy& tol) {
  return classify(y - x, tol);
}

bool is_chrono(CausalClass c) {
  return c == CausalClass::ChronoFuture || c == CausalClass::ChronoPast;
}

bool is_horismos(CausalClass c) {
  return c == CausalClass::HorismosFuture || c == CausalClass::HorismosPast;
}

bool is_causal(CausalClass c) { return is_chrono(c) || is_horismos(c); }

double euclidean_distance(const Event& a, const Event& b) {
  return (b - a).norm();
}

}  // namespace conetop
