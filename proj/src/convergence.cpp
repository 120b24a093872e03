#include "conetop/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "conetop/format.hpp"

namespace conetop {

namespace detail {

IntervalSet IntervalSet::whole(double lo, double hi) {
  IntervalSet s;
  if (hi >= lo) s.iv.push_back({lo, hi});
  return s;
}

IntervalSet IntervalSet::single(double lo, double hi) { return whole(lo, hi); }

void IntervalSet::add(double lo, double hi) {
  if (hi < lo) return;
  iv.push_back({lo, hi});
  std::sort(iv.begin(), iv.end(),
            [](const ParamInterval& a, const ParamInterval& b) { return a.lo < b.lo; });
  std::vector<ParamInterval> merged;
  for (const auto& r : iv) {
    if (!merged.empty() && r.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, r.hi);
    } else {
      merged.push_back(r);
    }
  }
  iv = std::move(merged);
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  IntervalSet out;
  std::size_t i = 0, j = 0;
  while (i < iv.size() && j < other.iv.size()) {
    const double lo = std::max(iv[i].lo, other.iv[j].lo);
    const double hi = std::min(iv[i].hi, other.iv[j].hi);
    if (lo <= hi) out.iv.push_back({lo, hi});
    if (iv[i].hi < other.iv[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  IntervalSet out = *this;
  for (const auto& r : other.iv) out.add(r.lo, r.hi);
  return out;
}

IntervalSet solve_nonpositive(const Quadratic& q, double lo, double hi) {
  const double span = std::max({1.0, std::abs(lo), std::abs(hi)});
  const double a_weight = std::abs(q.a) * span * span;
  const double rest_weight = std::abs(q.b) * span + std::abs(q.c);

  if (q.a == 0.0 || a_weight <= 1e-13 * rest_weight) {
    // effectively linear
    const double b_weight = std::abs(q.b) * span;
    if (q.b == 0.0 || b_weight <= 1e-13 * std::abs(q.c)) {
      return q.c <= 0.0 ? IntervalSet::whole(lo, hi) : IntervalSet::none();
    }
    const double root = -q.c / q.b;
    if (q.b > 0.0) return IntervalSet::whole(lo, std::min(hi, root));
    return IntervalSet::whole(std::max(lo, root), hi);
  }

  const double disc = q.b * q.b - 4.0 * q.a * q.c;
  if (disc <= 0.0) {
    return q.a < 0.0 ? IntervalSet::whole(lo, hi) : IntervalSet::none();
  }
  const double sq = std::sqrt(disc);
  const double t = -0.5 * (q.b + std::copysign(sq, q.b == 0.0 ? 1.0 : q.b));
  double r1, r2;
  if (t != 0.0) {
    r1 = t / q.a;
    r2 = q.c / t;
  } else {
    r1 = 0.0;
    r2 = -q.b / q.a;
  }
  if (r1 > r2) std::swap(r1, r2);
  if (q.a > 0.0) {
    return IntervalSet::whole(std::max(lo, r1), std::min(hi, r2));
  }
  IntervalSet out = IntervalSet::whole(lo, std::min(hi, r1));
  return out.unite(IntervalSet::whole(std::max(lo, r2), hi));
}

IntervalSet solve_nonnegative(const Quadratic& q, double lo, double hi) {
  return solve_nonpositive(Quadratic{-q.a, -q.b, -q.c}, lo, hi);
}

}  // namespace detail

using detail::IntervalSet;
using detail::Quadratic;

namespace {

struct LineGeom {
  Quadratic q;   // Minkowski form of v(s) = w + s d
  Quadratic n2;  // Euclidean |v(s)|^2
  double dt = 0.0, wt = 0.0;
};

LineGeom line_geom(const Event& p0, const Displacement& dir, const Event& center) {
  LineGeom g;
  Vec4 w;
  for (std::size_t i = 0; i < 4; ++i) w[i] = p0.c[i] - center.c[i];
  const Vec4& d = dir.v;
  g.q.a = d[0] * d[0] - d[1] * d[1] - d[2] * d[2] - d[3] * d[3];
  g.q.b = 2.0 * (d[0] * w[0] - d[1] * w[1] - d[2] * w[2] - d[3] * w[3]);
  g.q.c = w[0] * w[0] - w[1] * w[1] - w[2] * w[2] - w[3] * w[3];
  g.n2.a = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3];
  g.n2.b = 2.0 * (d[0] * w[0] + d[1] * w[1] + d[2] * w[2] + d[3] * w[3]);
  g.n2.c = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  g.dt = d[0];
  g.wt = w[0];
  return g;
}

enum class BandCmp { GtBand, LtNegBand, GeNegBand, LeBand, AbsGt };

/// Feasible set of a classification constraint against the relative band
/// tau * max(1, n2(s)), split at the n2(s) = 1 breakpoints.
IntervalSet solve_band(const LineGeom& g, double tau, BandCmp cmp, double lo, double hi) {
  using detail::solve_nonnegative;
  using detail::solve_nonpositive;
  const Quadratic small{g.n2.a, g.n2.b, g.n2.c - 1.0};   // n2 <= 1 region
  const IntervalSet near = solve_nonpositive(small, lo, hi);
  const IntervalSet far = solve_nonnegative(small, lo, hi);

  auto with_const = [&](double sign_q, double offset) {
    // sign_q * Q(s) + offset >= 0
    return solve_nonnegative(
        Quadratic{sign_q * g.q.a, sign_q * g.q.b, sign_q * g.q.c + offset}, lo, hi);
  };
  auto with_scaled = [&](double sign_q, double band_sign) {
    // sign_q * Q(s) + band_sign * tau * n2(s) >= 0
    return solve_nonnegative(Quadratic{sign_q * g.q.a + band_sign * tau * g.n2.a,
                                       sign_q * g.q.b + band_sign * tau * g.n2.b,
                                       sign_q * g.q.c + band_sign * tau * g.n2.c},
                             lo, hi);
  };

  switch (cmp) {
    case BandCmp::GtBand:  // Q > tau * max(1, n2)
      return near.intersect(with_const(1.0, -tau)).unite(far.intersect(with_scaled(1.0, -tau)));
    case BandCmp::LtNegBand:  // Q < -band
      return near.intersect(with_const(-1.0, -tau)).unite(far.intersect(with_scaled(-1.0, -tau)));
    case BandCmp::GeNegBand:  // Q >= -band
      return near.intersect(with_const(1.0, tau)).unite(far.intersect(with_scaled(1.0, tau)));
    case BandCmp::LeBand:  // Q <= band
      return near.intersect(with_const(-1.0, tau)).unite(far.intersect(with_scaled(-1.0, tau)));
    case BandCmp::AbsGt:  // |Q| > band
      return solve_band(g, tau, BandCmp::GtBand, lo, hi)
          .unite(solve_band(g, tau, BandCmp::LtNegBand, lo, hi));
  }
  return IntervalSet::none();
}

IntervalSet time_sign(const LineGeom& g, bool positive, double lo, double hi) {
  const Quadratic lin{0.0, positive ? g.dt : -g.dt, positive ? g.wt : -g.wt};
  return detail::solve_nonnegative(lin, lo, hi);
}

struct LineAnalysis {
  IntervalSet feasible;
  Quadratic q;  // classification quadratic relative to the center
  std::string constraint;
};

Event line_at(const Event& p0, const Displacement& dir, double s) {
  return translate(p0, scaled(dir, s));
}

LineAnalysis analyze_line(const Event& p0, const Displacement& dir, double lo, double hi,
                          const BasicNbhd& b, const TolerancePolicy& tol) {
  LineAnalysis out;
  const double tau = tol.tau_rel;

  if (b.kind == TopologyKind::Alexandrov) {
    const LineGeom ga = line_geom(p0, dir, *b.tip_past);
    const LineGeom gb = line_geom(p0, dir, *b.tip_future);
    out.q = ga.q;
    out.constraint = "diamond needs Q > band on both tips with matching time signs";
    out.feasible = solve_band(ga, tau, BandCmp::GtBand, lo, hi)
                       .intersect(time_sign(ga, true, lo, hi))
                       .intersect(solve_band(gb, tau, BandCmp::GtBand, lo, hi))
                       .intersect(time_sign(gb, false, lo, hi));
    return out;
  }

  const LineGeom g = line_geom(p0, dir, b.center);
  out.q = g.q;

  IntervalSet ball = IntervalSet::whole(lo, hi);
  if (is_bounded(b.kind)) {
    const double eps = *b.radius;
    ball = detail::solve_nonpositive(Quadratic{g.n2.a, g.n2.b, g.n2.c - eps * eps}, lo, hi);
  }

  IntervalSet cls;
  switch (b.kind) {
    case TopologyKind::Manifold:
      out.constraint = "ball needs |v(s)|^2 < eps^2";
      out.feasible = ball;
      return out;
    case TopologyKind::ZT:
    case TopologyKind::IntSpacelike:
      out.constraint = "time-cone needs Q > band";
      cls = solve_band(g, tau, BandCmp::GtBand, lo, hi);
      break;
    case TopologyKind::ZS:
    case TopologyKind::IntCausal:
      out.constraint = "space-cone needs Q < -band";
      cls = solve_band(g, tau, BandCmp::LtNegBand, lo, hi);
      break;
    case TopologyKind::Z:
    case TopologyKind::IntHorismos:
      out.constraint = "light-cone complement needs |Q| > band";
      cls = solve_band(g, tau, BandCmp::AbsGt, lo, hi);
      break;
    case TopologyKind::ZTDash:
    case TopologyKind::IntSpacelikeDash:
      out.constraint = "causal-cone needs Q >= -band";
      cls = solve_band(g, tau, BandCmp::GeNegBand, lo, hi);
      break;
    case TopologyKind::ZSDash:
    case TopologyKind::IntCausalDash:
      out.constraint = "closed space-cone needs Q <= band";
      cls = solve_band(g, tau, BandCmp::LeBand, lo, hi);
      break;
    case TopologyKind::Alexandrov:
      break;  // handled above
  }
  out.feasible = cls.intersect(ball);

  // Apex: every non-diamond kind keeps its center.
  if (g.n2.a > 0.0) {
    const double s0 = -g.n2.b / (2.0 * g.n2.a);
    if (s0 >= lo && s0 <= hi && line_at(p0, dir, s0) == b.center) {
      out.feasible.add(s0, s0);
    }
  }
  return out;
}

std::string fmt_quadratic(const Quadratic& q) {
  return fmt_double(q.a) + "*s^2 + " + fmt_double(q.b) + "*s + " + fmt_double(q.c);
}

MeetResult meets_on_line(const Curve& c, const Event& p0, const Displacement& dir, double lo,
                         double hi, const BasicNbhd& b, const TolerancePolicy& tol) {
  const LineAnalysis an = analyze_line(p0, dir, lo, hi, b, tol);
  MeetResult out;
  out.analytic = true;
  out.q_quadratic = an.q;
  (void)c;

  for (const auto& r : an.feasible.iv) {
    const double w = r.hi - r.lo;
    const double probes[] = {r.lo + 0.5 * w, r.lo + 0.25 * w, r.lo + 0.75 * w,
                             r.lo + 0.01 * w, r.hi - 0.01 * w, r.lo, r.hi};
    for (double s : probes) {
      if (member(b, line_at(p0, dir, s), tol)) {
        out.meets = true;
        out.s_star = s;
        out.certificate = "MEETS: s*=" + fmt_double(s) + " inside " + describe(b);
        return out;
      }
    }
  }
  if (!an.feasible.empty()) {
    // Analytic candidates sat on a boundary sliver; fall back to a scan.
    for (int i = 0; i <= 512; ++i) {
      const double s = lo + (hi - lo) * static_cast<double>(i) / 512.0;
      if (member(b, line_at(p0, dir, s), tol)) {
        out.meets = true;
        out.analytic = false;
        out.s_star = s;
        out.certificate = "MEETS (scan): s*=" + fmt_double(s);
        return out;
      }
    }
  }
  out.meets = false;
  out.certificate = "EMPTY: Q(s) = " + fmt_quadratic(an.q) + "; " + an.constraint +
                    "; no admissible s in [" + fmt_double(lo) + ", " + fmt_double(hi) + "]";
  return out;
}

}  // namespace

Event Curve::at(double s) const {
  switch (shape) {
    case Shape::Line:
      return line_at(p0, dir, s);
    case Shape::Hyperbola: {
      Event e = origin(dim);
      e.c[0] = s;
      e.c[1] = std::sqrt(s * s + k2);
      return e;
    }
    case Shape::Polyline: {
      if (vertices.size() < 2) throw std::invalid_argument("polyline needs two vertices");
      std::size_t seg = 0;
      while (seg + 2 < params.size() && s > params[seg + 1]) ++seg;
      const double t0 = params[seg], t1 = params[seg + 1];
      const double u = t1 == t0 ? 0.0 : (s - t0) / (t1 - t0);
      Event e = vertices[seg];
      for (std::size_t i = 0; i < 4; ++i) {
        e.c[i] = vertices[seg].c[i] + u * (vertices[seg + 1].c[i] - vertices[seg].c[i]);
      }
      return e;
    }
  }
  throw std::logic_error("unreachable curve shape");
}

Curve line_curve(const Event& p0, const Displacement& dir, double s_min, double s_max) {
  if (dir.norm2() == 0.0) throw std::invalid_argument("degenerate direction");
  Curve c;
  c.shape = Curve::Shape::Line;
  c.dim = p0.n;
  c.p0 = p0;
  c.dir = dir;
  c.s_min = s_min;
  c.s_max = s_max;
  return c;
}

Curve polyline_curve(std::vector<Event> vertices, std::vector<double> params) {
  if (vertices.size() < 2 || vertices.size() != params.size()) {
    throw std::invalid_argument("polyline needs matching vertices and parameters");
  }
  Curve c;
  c.shape = Curve::Shape::Polyline;
  c.dim = vertices.front().n;
  c.s_min = params.front();
  c.s_max = params.back();
  c.vertices = std::move(vertices);
  c.params = std::move(params);
  return c;
}

MeetResult curve_meets_nbhd(const Curve& c, const BasicNbhd& b, const TolerancePolicy& tol) {
  switch (c.shape) {
    case Curve::Shape::Line:
      return meets_on_line(c, c.p0, c.dir, c.s_min, c.s_max, b, tol);
    case Curve::Shape::Polyline: {
      MeetResult first_empty;
      bool have_empty = false;
      for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        Displacement d = c.vertices[i + 1] - c.vertices[i];
        if (d.norm2() == 0.0) continue;
        MeetResult r = meets_on_line(c, c.vertices[i], d, 0.0, 1.0, b, tol);
        if (r.meets) {
          r.s_star = c.params[i] + r.s_star * (c.params[i + 1] - c.params[i]);
          return r;
        }
        if (!have_empty) {
          first_empty = r;
          have_empty = true;
        }
      }
      first_empty.certificate =
          "EMPTY on all segments; first segment: " + first_empty.certificate;
      return first_empty;
    }
    case Curve::Shape::Hyperbola: {
      // TODO: exact conic-vs-cone sign analysis; the sampled check below is
      // documented as incomplete.
      MeetResult out;
      out.analytic = false;
      const int samples = 512;
      for (int i = 0; i <= samples; ++i) {
        const double s =
            c.s_min + (c.s_max - c.s_min) * static_cast<double>(i) / static_cast<double>(samples);
        if (member(b, c.at(s), tol)) {
          out.meets = true;
          out.s_star = s;
          out.certificate = "MEETS (sampled): s*=" + fmt_double(s);
          return out;
        }
      }
      out.meets = false;
      out.certificate = "SAMPLED-EMPTY: no member among " + std::to_string(samples + 1) +
                        " samples in [" + fmt_double(c.s_min) + ", " + fmt_double(c.s_max) + "]";
      return out;
    }
  }
  throw std::logic_error("unreachable curve shape");
}

bool certificate_reverifies(const Curve& c, const BasicNbhd& b, const TolerancePolicy& tol,
                            int base_samples, int factor) {
  const int samples = base_samples * factor;
  for (int i = 0; i <= samples; ++i) {
    const double s =
        c.s_min + (c.s_max - c.s_min) * static_cast<double>(i) / static_cast<double>(samples);
    if (member(b, c.at(s), tol)) return false;
  }
  return true;
}

EventSequence ray_sequence(const Displacement& direction, int n_max) {
  EventSequence seq;
  seq.limit = origin(direction.n);
  seq.n_max = n_max;
  seq.at = [direction](int n) {
    Event e = origin(direction.n);
    for (std::size_t i = 0; i < 4; ++i) e.c[i] = direction.v[i] / static_cast<double>(n);
    return e;
  };
  return seq;
}

const char* to_string(Outcome o) {
  return o == Outcome::Converges ? "converges" : "refuted";
}

Verdict converges(const EventSequence& seq, std::span<const BasicNbhd> schedule_sets,
                  const TolerancePolicy& tol) {
  if (seq.n_max < 16) throw std::invalid_argument("n_max must be at least 16");
  if (schedule_sets.empty()) throw std::invalid_argument("empty schedule");
  for (const BasicNbhd& b : schedule_sets) {
    if (!member(b, seq.limit, tol)) {
      throw std::invalid_argument("schedule set does not contain the limit");
    }
  }

  Verdict v;
  v.n_max = seq.n_max;
  int worst = 1;
  for (const BasicNbhd& b : schedule_sets) {
    int misses = 0;
    int tail_start = -1;  // least N with all of [N, n_max] inside
    for (int n = seq.n_max; n >= 1; --n) {
      if (member(b, seq.at(n), tol)) {
        if (misses == 0) tail_start = n;
      } else {
        ++misses;
      }
    }
    if (tail_start == -1) {
      v.outcome = Outcome::Refuted;
      v.witness_nbhd = b;
      v.certificate = "no tail index N <= " + std::to_string(seq.n_max) + ": sequence leaves " +
                      describe(b) + " arbitrarily late (" + std::to_string(misses) +
                      " of " + std::to_string(seq.n_max) + " indices outside)";
      return v;
    }
    worst = std::max(worst, tail_start);
  }
  v.outcome = Outcome::Converges;
  v.threshold_n = worst;
  v.certificate = "tail inside every schedule set from N=" + std::to_string(worst);
  return v;
}

Verdict converges(const EventSequence& seq, TopologyKind kind, const Schedule& schedule,
                  const TolerancePolicy& tol, std::optional<Partition> partition) {
  const auto sets = local_schedule(kind, seq.limit, schedule, std::move(partition));
  return converges(seq, sets, tol);
}

const char* to_string(CurveFamilyKind k) {
  switch (k) {
    case CurveFamilyKind::RotatingNullGeodesics: return "RotatingNullGeodesics";
    case CurveFamilyKind::ParallelNullLines: return "ParallelNullLines";
    case CurveFamilyKind::TimelikeHyperbolae: return "TimelikeHyperbolae";
    case CurveFamilyKind::RotatingTimelikeLines: return "RotatingTimelikeLines";
    case CurveFamilyKind::Polyline: return "Polyline";
  }
  return "Unknown";
}

std::optional<CurveFamilyKind> parse_curve_family(std::string_view name) {
  for (CurveFamilyKind k :
       {CurveFamilyKind::RotatingNullGeodesics, CurveFamilyKind::ParallelNullLines,
        CurveFamilyKind::TimelikeHyperbolae, CurveFamilyKind::RotatingTimelikeLines}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

Curve CurveFamily::curve(int n) const {
  if (n < 1) throw std::invalid_argument("curve index starts at 1");
  switch (kind) {
    case CurveFamilyKind::RotatingNullGeodesics: {
      const double theta = theta0 / static_cast<double>(n);
      Displacement d = make_displacement({1.0, std::cos(theta), std::sin(theta)});
      return line_curve(origin(2), d, 0.0, s_max);
    }
    case CurveFamilyKind::ParallelNullLines: {
      Event p0 = make_event({0.0, 1.0 / static_cast<double>(n), 0.0});
      return line_curve(p0, make_displacement({1.0, 1.0, 0.0}), -s_max, s_max);
    }
    case CurveFamilyKind::TimelikeHyperbolae: {
      Curve c;
      c.shape = Curve::Shape::Hyperbola;
      c.dim = 2;
      c.k2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
      c.s_min = -s_max;
      c.s_max = s_max;
      return c;
    }
    case CurveFamilyKind::RotatingTimelikeLines: {
      const double v = v0 / static_cast<double>(n);
      return line_curve(origin(2), make_displacement({1.0, v, 0.0}), -s_max, s_max);
    }
    case CurveFamilyKind::Polyline: {
      if (n > max_index()) throw std::invalid_argument("sampled family exhausted");
      return sampled_curves[static_cast<std::size_t>(n - 1)];
    }
  }
  throw std::logic_error("unreachable family kind");
}

Curve CurveFamily::limit_curve() const {
  switch (kind) {
    case CurveFamilyKind::RotatingNullGeodesics:
      return line_curve(origin(2), make_displacement({1.0, 1.0, 0.0}), 0.0, s_max);
    case CurveFamilyKind::ParallelNullLines:
      return line_curve(origin(2), make_displacement({1.0, 1.0, 0.0}), -s_max, s_max);
    case CurveFamilyKind::TimelikeHyperbolae:
      return polyline_curve({make_event({-s_max, s_max, 0.0}), origin(2),
                             make_event({s_max, s_max, 0.0})},
                            {-s_max, 0.0, s_max});
    case CurveFamilyKind::RotatingTimelikeLines:
      return line_curve(origin(2), make_displacement({1.0, 0.0, 0.0}), -s_max, s_max);
    case CurveFamilyKind::Polyline:
      return *sampled_gamma;
  }
  throw std::logic_error("unreachable family kind");
}

Event CurveFamily::limit_point() const {
  if (kind == CurveFamilyKind::Polyline) return *sampled_limit;
  return origin(2);
}

int CurveFamily::max_index() const {
  if (kind == CurveFamilyKind::Polyline) return static_cast<int>(sampled_curves.size());
  return std::numeric_limits<int>::max();
}

std::vector<double> CurveFamily::sample_params(int count) const {
  const Curve gamma = limit_curve();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j) {
    out.push_back(gamma.s_min + (gamma.s_max - gamma.s_min) * static_cast<double>(j) /
                                    static_cast<double>(count + 1));
  }
  return out;
}

CurveFamily rotating_null_geodesics(double theta0, double s_max) {
  CurveFamily f;
  f.kind = CurveFamilyKind::RotatingNullGeodesics;
  f.theta0 = theta0;
  f.s_max = s_max;
  return f;
}

CurveFamily parallel_null_lines(double s_max) {
  CurveFamily f;
  f.kind = CurveFamilyKind::ParallelNullLines;
  f.s_max = s_max;
  return f;
}

CurveFamily timelike_hyperbolae(double s_max) {
  CurveFamily f;
  f.kind = CurveFamilyKind::TimelikeHyperbolae;
  f.s_max = s_max;
  return f;
}

CurveFamily rotating_timelike_lines(double v0, double s_max) {
  CurveFamily f;
  f.kind = CurveFamilyKind::RotatingTimelikeLines;
  f.v0 = v0;
  f.s_max = s_max;
  return f;
}

CurveFamily polyline_family(std::vector<Curve> curves, Curve gamma, Event limit) {
  if (curves.empty()) throw std::invalid_argument("sampled family needs at least one curve");
  CurveFamily f;
  f.kind = CurveFamilyKind::Polyline;
  f.dim = gamma.dim;
  f.s_max = gamma.s_max;
  f.sampled_curves = std::move(curves);
  f.sampled_gamma = std::move(gamma);
  f.sampled_limit = limit;
  return f;
}

const char* to_string(LimitDefn d) { return d == LimitDefn::D1 ? "D1" : "D2"; }

std::optional<LimitDefn> parse_limit_defn(std::string_view name) {
  if (name == "D1") return LimitDefn::D1;
  if (name == "D2") return LimitDefn::D2;
  return std::nullopt;
}

namespace {

struct MeetsTensor {
  std::vector<Event> points;
  std::vector<std::vector<BasicNbhd>> sets;                    // per point
  std::vector<std::vector<std::vector<std::uint8_t>>> meets;   // [p][b][n-1]
  std::vector<std::vector<MeetResult>> first_miss;             // [p][b]
};

MeetsTensor compute_tensor(const CurveFamily& fam, const Curve& gamma, TopologyKind kind,
                           const LctParams& params, const TolerancePolicy& tol) {
  MeetsTensor t;
  const auto s_params = fam.sample_params(params.gamma_samples);
  for (double s : s_params) t.points.push_back(gamma.at(s));
  for (const Event& p : t.points) {
    t.sets.push_back(local_schedule(kind, p, params.schedule, params.partition));
  }
  const int n_max = std::min(params.horizon.n_max, fam.max_index());
  t.meets.resize(t.points.size());
  t.first_miss.resize(t.points.size());
  for (std::size_t pi = 0; pi < t.points.size(); ++pi) {
    t.meets[pi].resize(t.sets[pi].size());
    t.first_miss[pi].resize(t.sets[pi].size());
    for (std::size_t bi = 0; bi < t.sets[pi].size(); ++bi) {
      auto& row = t.meets[pi][bi];
      row.resize(static_cast<std::size_t>(n_max), 0);
      bool have_miss = false;
      for (int n = 1; n <= n_max; ++n) {
        const MeetResult r = curve_meets_nbhd(fam.curve(n), t.sets[pi][bi], tol);
        row[static_cast<std::size_t>(n - 1)] = r.meets ? 1 : 0;
        if (!r.meets && !have_miss) {
          t.first_miss[pi][bi] = r;
          have_miss = true;
        }
      }
    }
  }
  return t;
}

bool tensor_pass(const MeetsTensor& t, int stride, double tail_fraction, std::size_t* fail_p,
                 std::size_t* fail_b) {
  for (std::size_t pi = 0; pi < t.points.size(); ++pi) {
    for (std::size_t bi = 0; bi < t.sets[pi].size(); ++bi) {
      int total = 0, hit = 0;
      for (std::size_t k = static_cast<std::size_t>(stride) - 1; k < t.meets[pi][bi].size();
           k += static_cast<std::size_t>(stride)) {
        ++total;
        hit += t.meets[pi][bi][k];
      }
      if (total == 0 || static_cast<double>(hit) < tail_fraction * static_cast<double>(total)) {
        if (fail_p) *fail_p = pi;
        if (fail_b) *fail_b = bi;
        return false;
      }
    }
  }
  return true;
}

Verdict verdict_from_tensor(const MeetsTensor& t, LimitDefn defn, const Horizon& horizon) {
  Verdict v;
  v.n_max = horizon.n_max;
  v.tail_fraction = horizon.tail_fraction;
  std::size_t fp = 0, fb = 0;
  if (defn == LimitDefn::D1) {
    if (tensor_pass(t, 1, horizon.tail_fraction, nullptr, nullptr)) {
      v.outcome = Outcome::Converges;
      v.certificate = "every sampled point and schedule set met by a tail share >= " +
                      fmt_double(horizon.tail_fraction);
      return v;
    }
    tensor_pass(t, 1, horizon.tail_fraction, &fp, &fb);
  } else {
    for (int stride = 1; stride <= 8; ++stride) {
      if (tensor_pass(t, stride, horizon.tail_fraction, nullptr, nullptr)) {
        v.outcome = Outcome::Converges;
        v.certificate = "arithmetic subsequence with stride " + std::to_string(stride) +
                        " passes the tail test";
        return v;
      }
    }
    tensor_pass(t, 1, horizon.tail_fraction, &fp, &fb);
  }
  v.outcome = Outcome::Refuted;
  v.witness_point = t.points[fp];
  v.witness_nbhd = t.sets[fp][fb];
  const MeetResult& miss = t.first_miss[fp][fb];
  v.certificate = miss.certificate;
  v.q_trace = miss.q_quadratic;
  v.has_q_trace = miss.analytic;
  return v;
}

}  // namespace

Verdict limit_curve_check(const CurveFamily& fam, const Curve& gamma, TopologyKind kind,
                          LimitDefn defn, const LctParams& params, const TolerancePolicy& tol) {
  if (params.horizon.n_max < 16) throw std::invalid_argument("horizon n_max must be >= 16");
  const MeetsTensor t = compute_tensor(fam, gamma, kind, params, tol);
  return verdict_from_tensor(t, defn, params.horizon);
}

std::vector<LctRow> lct_matrix(std::span<const CurveFamily> families,
                               std::span<const TopologyKind> kinds,
                               std::span<const LimitDefn> defns, const LctParams& params,
                               const TolerancePolicy& tol, int threads) {
  struct Cell {
    std::vector<LctRow> rows;
  };
  const std::size_t pair_count = families.size() * kinds.size();
  std::vector<Cell> cells(pair_count);

  auto run_pair = [&](std::size_t idx) {
    const CurveFamily& fam = families[idx / kinds.size()];
    const TopologyKind kind = kinds[idx % kinds.size()];
    const Curve gamma = fam.limit_curve();
    const MeetsTensor t = compute_tensor(fam, gamma, kind, params, tol);
    for (LimitDefn defn : defns) {
      const Verdict v = verdict_from_tensor(t, defn, params.horizon);
      LctRow row;
      row.family = to_string(fam.kind);
      row.kind = to_string(kind);
      row.defn = to_string(defn);
      row.verdict = v.outcome == Outcome::Converges ? "accepted" : "refuted";
      if (v.outcome == Outcome::Refuted) {
        row.witness = "p=" + format_event(*v.witness_point) + "; " + describe(*v.witness_nbhd) +
                      "; " + v.certificate;
        if (is_dashed(kind)) {
          row.note = "dashed kind refuted by the finite-horizon pointwise test";
        }
      } else if (!is_dashed(kind) && kind != TopologyKind::Manifold &&
                 kind != TopologyKind::Alexandrov) {
        row.note = "no refutation witness from this family";
      }
      cells[idx].rows.push_back(std::move(row));
    }
  };

  const int nthreads = std::max(1, threads);
  if (nthreads == 1 || pair_count <= 1) {
    for (std::size_t i = 0; i < pair_count; ++i) run_pair(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= pair_count) break;
        run_pair(i);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<LctRow> rows;
  for (auto& c : cells) {
    for (auto& r : c.rows) rows.push_back(std::move(r));
  }
  return rows;
}

std::optional<RefutationWitness> witness_search(const CurveFamily& fam, TopologyKind kind,
                                                const WitnessBudget& budget,
                                                const TolerancePolicy& tol) {
  const Curve gamma = fam.limit_curve();
  const auto s_params = fam.sample_params(budget.point_grid);
  for (double s : s_params) {
    const Event p = gamma.at(s);
    for (double eps : budget.eps_grid) {
      const auto sets = local_schedule(kind, p, Schedule{eps, 1});
      const BasicNbhd& b = sets.front();
      bool empty_for_all = true;
      std::string cert;
      const int n_hi = std::min(budget.n_max, fam.max_index());
      for (int n = 1; n <= n_hi; ++n) {
        const MeetResult r = curve_meets_nbhd(fam.curve(n), b, tol);
        if (r.meets) {
          empty_for_all = false;
          break;
        }
        if (n == 1) cert = r.certificate;
      }
      if (empty_for_all) {
        return RefutationWitness{p, b, cert};
      }
      if (is_interval_kind(kind)) break;  // radius-free: one set per point
    }
  }
  return std::nullopt;
}

}  // namespace conetop
