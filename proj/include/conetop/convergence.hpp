#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conetop/topology.hpp"

namespace conetop {

namespace detail {

/// p(s) = a s^2 + b s + c.
struct Quadratic {
  double a = 0.0, b = 0.0, c = 0.0;
  double eval(double s) const { return (a * s + b) * s + c; }
};

/// Sorted disjoint closed intervals.
struct IntervalSet {
  std::vector<ParamInterval> iv;

  bool empty() const { return iv.empty(); }
  static IntervalSet none() { return {}; }
  static IntervalSet whole(double lo, double hi);
  static IntervalSet single(double lo, double hi);
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  void add(double lo, double hi);
};

/// {s in [lo, hi] : q(s) <= 0}; boundary points are kept (their effect is
/// always re-confirmed through the exact membership predicate).
IntervalSet solve_nonpositive(const Quadratic& q, double lo, double hi);
IntervalSet solve_nonnegative(const Quadratic& q, double lo, double hi);

}  // namespace detail

/// Closed-form point sequence n |-> x_n with a declared candidate limit.
struct EventSequence {
  std::function<Event(int)> at;  // defined for n >= 1
  Event limit;
  int n_max = 256;               // >= 16
};

/// x_n = (1/n) * direction, limit at the origin.
EventSequence ray_sequence(const Displacement& direction, int n_max = 256);

enum class Outcome { Converges, Refuted };
const char* to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Converges;
  int n_max = 0;
  double tail_fraction = 0.0;
  /// Converges: least N such that every schedule set holds the whole tail.
  int threshold_n = 0;
  std::optional<Event> witness_point;     // limit-curve checks: the sampled p
  std::optional<BasicNbhd> witness_nbhd;  // the refuting basic set
  std::string certificate;
  detail::Quadratic q_trace;  // classification quadratic behind the certificate
  bool has_q_trace = false;
};

/// Neighborhood-filter convergence relative to a schedule: refuted iff some
/// schedule set excludes the sequence tail entirely. Every schedule set must
/// contain the declared limit.
Verdict converges(const EventSequence& seq, std::span<const BasicNbhd> schedule_sets,
                  const TolerancePolicy& tol);
Verdict converges(const EventSequence& seq, TopologyKind kind, const Schedule& schedule,
                  const TolerancePolicy& tol, std::optional<Partition> partition = {});

/// A parametric curve; lines and polylines get exact quadratic sign
/// analysis against cones and balls, other shapes fall back to sampling.
struct Curve {
  enum class Shape { Line, Polyline, Hyperbola };
  Shape shape = Shape::Line;
  int dim = 2;
  double s_min = 0.0, s_max = 1.0;

  // Line: p0 + s * dir
  Event p0;
  Displacement dir;

  // Hyperbola: (s, sqrt(s^2 + k2), 0)
  double k2 = 0.0;

  // Polyline: vertex i sits at parameter params[i]
  std::vector<Event> vertices;
  std::vector<double> params;

  Event at(double s) const;
};

Curve line_curve(const Event& p0, const Displacement& dir, double s_min, double s_max);
Curve polyline_curve(std::vector<Event> vertices, std::vector<double> params);

struct MeetResult {
  bool meets = false;
  double s_star = 0.0;   // interior witness parameter when meets
  bool analytic = false; // sign analysis (vs sampled fallback)
  detail::Quadratic q_quadratic;  // Q(curve(s) - center) for line analysis
  std::string certificate;
};

/// Does the curve intersect the basic set? Meets come with a confirmed
/// parameter, misses with an algebraic (or sampled) emptiness certificate.
MeetResult curve_meets_nbhd(const Curve& c, const BasicNbhd& b, const TolerancePolicy& tol);

/// Re-evaluate an emptiness claim at `factor` times the base sampling density.
bool certificate_reverifies(const Curve& c, const BasicNbhd& b, const TolerancePolicy& tol,
                            int base_samples = 512, int factor = 10);

enum class CurveFamilyKind {
  RotatingNullGeodesics,   // future null rays from the origin, angle theta0 / n
  ParallelNullLines,       // null lines offset by 1/n
  TimelikeHyperbolae,      // x = sqrt(t^2 + 1/n^2)
  RotatingTimelikeLines,   // lines through the origin with speed v0 / n
  Polyline,                // user-supplied sampled curves
};

const char* to_string(CurveFamilyKind k);
std::optional<CurveFamilyKind> parse_curve_family(std::string_view name);

struct CurveFamily {
  CurveFamilyKind kind = CurveFamilyKind::RotatingNullGeodesics;
  int dim = 2;
  double theta0 = 0.5;
  double v0 = 0.9;
  double s_max = 2.0;

  // Polyline families carry their curves explicitly.
  std::vector<Curve> sampled_curves;
  std::optional<Curve> sampled_gamma;
  std::optional<Event> sampled_limit;

  Curve curve(int n) const;
  Curve limit_curve() const;
  Event limit_point() const;
  /// Largest usable curve index (unbounded for the analytic families).
  int max_index() const;
  /// Interior parameter grid on the limit curve; never hits the shared point.
  std::vector<double> sample_params(int count) const;
};

CurveFamily rotating_null_geodesics(double theta0 = 0.5, double s_max = 2.0);
CurveFamily parallel_null_lines(double s_max = 2.0);
CurveFamily timelike_hyperbolae(double s_max = 2.0);
CurveFamily rotating_timelike_lines(double v0 = 0.9, double s_max = 2.0);
CurveFamily polyline_family(std::vector<Curve> curves, Curve gamma, Event limit);

enum class LimitDefn { D1, D2 };
const char* to_string(LimitDefn d);
std::optional<LimitDefn> parse_limit_defn(std::string_view name);

struct Horizon {
  int n_max = 256;
  double tail_fraction = 0.9;
};

struct LctParams {
  Schedule schedule{1.0, 3};
  int gamma_samples = 16;
  Horizon horizon;
  std::optional<Partition> partition;
};

/// D1: every sampled point of gamma has every schedule set met by at least
/// a tail_fraction share of the curves. D2: some arithmetic subsequence
/// (stride 1..8) passes the same test.
Verdict limit_curve_check(const CurveFamily& fam, const Curve& gamma, TopologyKind kind,
                          LimitDefn defn, const LctParams& params, const TolerancePolicy& tol);

struct LctRow {
  std::string family;
  std::string kind;
  std::string defn;
  std::string verdict;
  std::string witness;
  std::string note;
};

std::vector<LctRow> lct_matrix(std::span<const CurveFamily> families,
                               std::span<const TopologyKind> kinds,
                               std::span<const LimitDefn> defns, const LctParams& params,
                               const TolerancePolicy& tol, int threads = 1);

struct RefutationWitness {
  Event point;
  BasicNbhd nbhd;
  std::string certificate;
};

struct WitnessBudget {
  int point_grid = 6;
  std::vector<double> eps_grid{1.0, 0.5, 0.25, 0.125};
  int n_max = 256;
};

/// First (p, basic set) along the limit curve whose emptiness certificate
/// holds for every curve of the family, or nothing within the budget.
std::optional<RefutationWitness> witness_search(const CurveFamily& fam, TopologyKind kind,
                                                const WitnessBudget& budget,
                                                const TolerancePolicy& tol);

}  // namespace conetop
