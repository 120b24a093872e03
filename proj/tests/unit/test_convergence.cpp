#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "conetop/convergence.hpp"
#include "conetop/report.hpp"

using namespace conetop;

namespace {

const TolerancePolicy kTol;

EventSequence named_ray(const char* name) {
  Displacement d;
  d.n = 3;
  const std::string id(name);
  if (id == "null") d.v = {1, 1, 0, 0};
  if (id == "timelike") d.v = {1, 0, 0, 0};
  if (id == "spacelike") d.v = {0, 1, 0, 0};
  return ray_sequence(d, 256);
}

// Recipe oracle built directly on classify(), independent of BasicNbhd.
bool oracle_member(TopologyKind k, const Event& x, const Event& q, double eps) {
  if (q == x) return k != TopologyKind::Alexandrov;
  const CausalClass c = classify(x, q, kTol);
  const bool ball = euclidean_distance(x, q) < eps;
  switch (k) {
    case TopologyKind::Manifold: return ball;
    case TopologyKind::Z: return ball && !is_horismos(c);
    case TopologyKind::ZT: return ball && is_chrono(c);
    case TopologyKind::ZS: return ball && c == CausalClass::Spacelike;
    case TopologyKind::ZTDash: return ball && is_causal(c);
    case TopologyKind::ZSDash: return ball && (c == CausalClass::Spacelike || is_horismos(c));
    case TopologyKind::IntHorismos: return !is_horismos(c);
    case TopologyKind::IntSpacelike: return is_chrono(c);
    case TopologyKind::IntCausal: return c == CausalClass::Spacelike;
    case TopologyKind::IntSpacelikeDash: return is_causal(c);
    case TopologyKind::IntCausalDash: return c == CausalClass::Spacelike || is_horismos(c);
    default: return false;
  }
}

}  // namespace

TEST_CASE("interval solver basics") {
  using detail::Quadratic;
  // (s - 1)(s - 2) <= 0 on [0, 3]
  const auto mid = detail::solve_nonpositive(Quadratic{1.0, -3.0, 2.0}, 0.0, 3.0);
  REQUIRE(mid.iv.size() == 1);
  CHECK(mid.iv[0].lo == doctest::Approx(1.0));
  CHECK(mid.iv[0].hi == doctest::Approx(2.0));

  // negative leading coefficient keeps the outside
  const auto outside = detail::solve_nonpositive(Quadratic{-1.0, 3.0, -2.0}, 0.0, 3.0);
  REQUIRE(outside.iv.size() == 2);
  CHECK(outside.iv[0].hi == doctest::Approx(1.0));
  CHECK(outside.iv[1].lo == doctest::Approx(2.0));

  // linear and constant degenerations
  const auto lin = detail::solve_nonpositive(Quadratic{0.0, 2.0, -1.0}, -4.0, 4.0);
  REQUIRE(lin.iv.size() == 1);
  CHECK(lin.iv[0].hi == doctest::Approx(0.5));
  CHECK(detail::solve_nonpositive(Quadratic{0.0, 0.0, 1.0}, 0.0, 1.0).empty());
  CHECK_FALSE(detail::solve_nonpositive(Quadratic{0.0, 0.0, -1.0}, 0.0, 1.0).empty());

  detail::IntervalSet a = detail::IntervalSet::whole(0.0, 2.0);
  const auto b = detail::IntervalSet::whole(1.0, 3.0);
  const auto cap = a.intersect(b);
  REQUIRE(cap.iv.size() == 1);
  CHECK(cap.iv[0].lo == 1.0);
  CHECK(cap.iv[0].hi == 2.0);
}

TEST_CASE("discriminator sequences against the frozen verdict table") {
  const Schedule schedule{1.0, 6};
  const Partition part = default_partition(3);
  for (const auto& expect : discriminator_expectations()) {
    const EventSequence seq = named_ray(expect.sequence.c_str());
    const Verdict v = converges(seq, expect.kind, schedule, kTol, part);
    INFO(expect.sequence, " / ", to_string(expect.kind));
    CHECK(v.outcome == expect.expected);

    // recipe oracle: the verdict must match a direct tail scan of the
    // smallest schedule set, evaluated through classify() alone
    const double eps_min = 1.0 / 32.0;
    if (expect.kind != TopologyKind::Alexandrov) {
      const Event x = seq.limit;
      bool tail_ok = true;
      int from = -1;
      for (int n = seq.n_max; n >= 1; --n) {
        if (oracle_member(expect.kind, x, seq.at(n), eps_min)) {
          from = n;
        } else {
          break;
        }
      }
      tail_ok = from != -1;
      CHECK(tail_ok == (v.outcome == Outcome::Converges));
    }
  }
}

TEST_CASE("refuted sequences carry a witness") {
  const Verdict v = converges(named_ray("null"), TopologyKind::ZT, Schedule{1.0, 3}, kTol,
                              default_partition(3));
  REQUIRE(v.outcome == Outcome::Refuted);
  REQUIRE(v.witness_nbhd.has_value());
  CHECK(v.witness_nbhd->kind == TopologyKind::ZT);
  CHECK(v.certificate.find("256 of 256") != std::string::npos);
}

TEST_CASE("schedules must contain the limit") {
  EventSequence seq = named_ray("timelike");
  seq.limit = make_event({5.0, 0.0, 0.0, 0.0});
  const auto sets = local_schedule(TopologyKind::Manifold, origin(3), Schedule{1.0, 2});
  CHECK_THROWS_AS(converges(seq, sets, kTol), std::invalid_argument);
}

TEST_CASE("rotating null rays against time-cone sets at p=(1,1,0)") {
  const CurveFamily fam = rotating_null_geodesics(0.5, 2.0);
  const Event p = make_event({1.0, 1.0, 0.0});
  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, p, 0.5);

  for (int n : {1, 2, 8, 64}) {
    const MeetResult r = curve_meets_nbhd(fam.curve(n), zt, kTol);
    const double theta = 0.5 / n;
    INFO("n=", n);
    CHECK_FALSE(r.meets);
    CHECK(r.analytic);
    CHECK(std::abs(r.q_quadratic.a) < 1e-12);
    CHECK(r.q_quadratic.b == doctest::Approx(-2.0 * (1.0 - std::cos(theta))).epsilon(1e-12));
    CHECK(std::abs(r.q_quadratic.c) < 1e-12);
    CHECK(certificate_reverifies(fam.curve(n), zt, kTol, 512, 10));
  }

  // a manifold ball at p is met once the angle closes in
  const BasicNbhd ball = make_basic_nbhd(TopologyKind::Manifold, p, 0.5);
  const MeetResult hit = curve_meets_nbhd(fam.curve(2), ball, kTol);
  CHECK(hit.meets);
  CHECK(hit.s_star == doctest::Approx(1.0).epsilon(0.2));

  // curves through the center of the set always meet it
  const BasicNbhd at_origin = make_basic_nbhd(TopologyKind::ZT, origin(2), 0.5);
  CHECK(curve_meets_nbhd(fam.curve(3), at_origin, kTol).meets);
}

TEST_CASE("limit-curve verdicts for the rotating family") {
  const CurveFamily fam = rotating_null_geodesics(0.5, 2.0);
  LctParams params;
  params.partition = default_partition(2);

  const Verdict manifold =
      limit_curve_check(fam, fam.limit_curve(), TopologyKind::Manifold, LimitDefn::D1, params, kTol);
  CHECK(manifold.outcome == Outcome::Converges);

  const Verdict zt =
      limit_curve_check(fam, fam.limit_curve(), TopologyKind::ZT, LimitDefn::D1, params, kTol);
  REQUIRE(zt.outcome == Outcome::Refuted);
  CHECK(zt.witness_point.has_value());
  CHECK(zt.certificate.find("EMPTY") != std::string::npos);

  const Verdict interval = limit_curve_check(fam, fam.limit_curve(), TopologyKind::IntSpacelike,
                                             LimitDefn::D1, params, kTol);
  CHECK(interval.outcome == Outcome::Refuted);

  const Verdict d2 =
      limit_curve_check(fam, fam.limit_curve(), TopologyKind::ZT, LimitDefn::D2, params, kTol);
  CHECK(d2.outcome == Outcome::Refuted);

  const Verdict manifold_d2 =
      limit_curve_check(fam, fam.limit_curve(), TopologyKind::Manifold, LimitDefn::D2, params, kTol);
  CHECK(manifold_d2.outcome == Outcome::Converges);
}

TEST_CASE("witness search outcomes") {
  const TolerancePolicy tol;
  WitnessBudget budget;
  budget.point_grid = 4;
  budget.n_max = 128;

  const auto zt_witness = witness_search(rotating_null_geodesics(), TopologyKind::ZT, budget, tol);
  REQUIRE(zt_witness.has_value());
  CHECK(zt_witness->certificate.find("EMPTY") != std::string::npos);

  CHECK_FALSE(witness_search(rotating_null_geodesics(), TopologyKind::Z, budget, tol).has_value());
  CHECK_FALSE(witness_search(parallel_null_lines(), TopologyKind::ZT, budget, tol).has_value());
}

TEST_CASE("hyperbolae and their broken-null limit") {
  const CurveFamily fam = timelike_hyperbolae(2.0);
  const Curve gamma = fam.limit_curve();
  CHECK(gamma.at(0.0) == origin(2));
  CHECK(gamma.at(2.0) == make_event({2.0, 2.0, 0.0}));
  CHECK(gamma.at(-2.0) == make_event({-2.0, 2.0, 0.0}));

  const Curve c4 = fam.curve(4);
  CHECK(c4.at(0.0).c[1] == doctest::Approx(0.25));

  LctParams params;
  const Verdict v =
      limit_curve_check(fam, gamma, TopologyKind::Manifold, LimitDefn::D1, params, kTol);
  CHECK(v.outcome == Outcome::Converges);
}

TEST_CASE("rotating timelike lines converge in every time-cone recipe") {
  const CurveFamily fam = rotating_timelike_lines(0.9, 2.0);
  LctParams params;
  for (TopologyKind k : {TopologyKind::Manifold, TopologyKind::ZT, TopologyKind::IntSpacelike}) {
    const Verdict v = limit_curve_check(fam, fam.limit_curve(), k, LimitDefn::D1, params, kTol);
    INFO(to_string(k));
    CHECK(v.outcome == Outcome::Converges);
  }
}

TEST_CASE("sampled polyline families run through the same harness") {
  std::vector<Curve> curves;
  for (int k = 1; k <= 20; ++k) {
    const double v = 0.01 / k;
    curves.push_back(polyline_curve({make_event({-2.0, -2.0 * v, 0.0}), origin(2),
                                     make_event({2.0, 2.0 * v, 0.0})},
                                    {-2.0, 0.0, 2.0}));
  }
  Curve gamma = line_curve(origin(2), make_displacement({1.0, 0.0, 0.0}), -2.0, 2.0);
  const CurveFamily fam = polyline_family(curves, gamma, origin(2));
  CHECK(fam.max_index() == 20);
  CHECK_THROWS_AS(fam.curve(21), std::invalid_argument);

  LctParams params;
  for (TopologyKind k : {TopologyKind::Manifold, TopologyKind::ZT}) {
    const Verdict v = limit_curve_check(fam, gamma, k, LimitDefn::D1, params, kTol);
    INFO(to_string(k));
    CHECK(v.outcome == Outcome::Converges);
  }
}

TEST_CASE("refutation monotonicity over horizon and schedule") {
  const Partition part = default_partition(3);
  for (int n_max : {64, 128, 256}) {
    Displacement d;
    d.n = 3;
    d.v = {1, 1, 0, 0};
    const EventSequence seq = ray_sequence(d, n_max);
    for (int steps : {2, 4, 6}) {
      const Verdict v = converges(seq, TopologyKind::ZT, Schedule{1.0, steps}, kTol, part);
      CHECK(v.outcome == Outcome::Refuted);
    }
  }
}

TEST_CASE("lct matrix rows are ordered and annotated") {
  const CurveFamily fams[] = {rotating_null_geodesics()};
  const TopologyKind kinds[] = {TopologyKind::Manifold, TopologyKind::ZT, TopologyKind::ZTDash};
  const LimitDefn defns[] = {LimitDefn::D1};
  LctParams params;
  const auto rows = lct_matrix(fams, kinds, defns, params, kTol, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].kind == "Manifold");
  CHECK(rows[0].verdict == "accepted");
  CHECK(rows[1].kind == "ZT");
  CHECK(rows[1].verdict == "refuted");
  CHECK(rows[2].kind == "ZTDash");
  CHECK(rows[2].verdict == "refuted");
  CHECK_FALSE(rows[2].note.empty());  // the dashed divergence stays visible
}
