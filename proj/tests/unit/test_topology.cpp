#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "conetop/rng.hpp"
#include "conetop/topology.hpp"

using namespace conetop;

namespace {
const TolerancePolicy kTol;
}

TEST_CASE("basic membership recipes") {
  const Event o = origin(3);
  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, o, 1.0);
  CHECK(member(zt, make_event({0.5, 0, 0, 0}), kTol));
  CHECK_FALSE(member(zt, make_event({0.5, 0.5, 0, 0}), kTol));  // null excluded
  CHECK(member(make_basic_nbhd(TopologyKind::ZTDash, o, 1.0), make_event({0.5, 0.5, 0, 0}), kTol));

  // punctured-light-cone complement keeps spacelike points inside the ball
  const Event spacelike_q = make_event({0, 0.5, 0, 0});
  CHECK(classify(o, spacelike_q, kTol) == CausalClass::Spacelike);
  CHECK(euclidean_distance(o, spacelike_q) < 1.0);
  CHECK(member(make_basic_nbhd(TopologyKind::Z, o, 1.0), spacelike_q, kTol));

  CHECK(member(zt, o, kTol));  // apex kept in every recipe
  CHECK(member(make_basic_nbhd(TopologyKind::ZS, o, 1.0), o, kTol));
  CHECK(member(make_basic_nbhd(TopologyKind::IntCausal, o), o, kTol));
}

TEST_CASE("basic set construction is validated") {
  const Event o = origin(3);
  CHECK_THROWS_AS(make_basic_nbhd(TopologyKind::ZT, o), std::invalid_argument);
  CHECK_THROWS_AS(make_basic_nbhd(TopologyKind::IntSpacelike, o, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_basic_nbhd(TopologyKind::Alexandrov, o, 1.0), std::invalid_argument);
}

TEST_CASE("kind names round trip") {
  for (TopologyKind k : all_topology_kinds()) {
    CHECK(parse_topology_kind(to_string(k)) == k);
  }
  CHECK(parse_topology_kind("zt") == TopologyKind::ZT);
  CHECK_FALSE(parse_topology_kind("Fine").has_value());
  CHECK(all_topology_kinds().size() == kTopologyKindCount);
}

TEST_CASE("local schedules") {
  const Event o = origin(3);
  const auto balls = local_schedule(TopologyKind::Manifold, o, Schedule{1.0, 3});
  REQUIRE(balls.size() == 3);
  CHECK(balls[0].radius == 1.0);
  CHECK(balls[1].radius == 0.5);
  CHECK(balls[2].radius == 0.25);

  const auto minimal = local_schedule(TopologyKind::IntSpacelike, o, Schedule{1.0, 3});
  REQUIRE(minimal.size() == 1);
  CHECK_FALSE(minimal[0].radius.has_value());

  const auto zs = local_schedule(TopologyKind::ZS, o, Schedule{1.0, 2});
  REQUIRE(zs.size() == 2);
  CHECK(member(zs[0], o, kTol));

  const auto diamonds = local_schedule(TopologyKind::Alexandrov, o, Schedule{1.0, 2});
  REQUIRE(diamonds.size() == 2);
  CHECK(member(diamonds[0], o, kTol));
  CHECK(member(diamonds[1], o, kTol));
}

TEST_CASE("intersection equalities with the interval minimal sets") {
  Rng rng(43);
  const Event x = random_event(rng, 3);
  const double eps = 1.0;
  const BasicNbhd ball = make_basic_nbhd(TopologyKind::Manifold, x, eps);
  const BasicNbhd z = make_basic_nbhd(TopologyKind::Z, x, eps);
  const BasicNbhd zs = make_basic_nbhd(TopologyKind::ZS, x, eps);
  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, x, eps);
  const BasicNbhd min_h = to_basic_nbhd(minimal_interval_nbhd(horismos_irr(), x));
  const BasicNbhd min_c = to_basic_nbhd(minimal_interval_nbhd(causal_irr(), x));
  const BasicNbhd min_s =
      to_basic_nbhd(minimal_interval_nbhd(spacelike_leq(make_partition({1.0, 0, 0})), x));

  for (int i = 0; i < 2000; ++i) {
    Event q = random_event(rng, 3);
    for (int k = 0; k <= 3; ++k) {
      q.c[static_cast<std::size_t>(k)] = x.c[static_cast<std::size_t>(k)] + rng.uniform(-2.0, 2.0);
    }
    CHECK(member(z, q, kTol) == intersection_member(min_h, ball, q, kTol));
    CHECK(member(zs, q, kTol) == intersection_member(min_c, ball, q, kTol));
    CHECK(member(zt, q, kTol) == intersection_member(min_s, ball, q, kTol));
  }
}

TEST_CASE("dashed recipes differ exactly by the punctured light cone") {
  Rng rng(47);
  const Event x = origin(3);
  const std::pair<TopologyKind, TopologyKind> pairs[] = {
      {TopologyKind::ZT, TopologyKind::ZTDash},
      {TopologyKind::ZS, TopologyKind::ZSDash},
      {TopologyKind::IntSpacelike, TopologyKind::IntSpacelikeDash},
      {TopologyKind::IntCausal, TopologyKind::IntCausalDash},
  };
  for (const auto& [plain_kind, dash_kind] : pairs) {
    const auto radius = is_bounded(plain_kind) ? std::optional<double>(1.0) : std::nullopt;
    const BasicNbhd plain = make_basic_nbhd(plain_kind, x, radius);
    const BasicNbhd dash = make_basic_nbhd(dash_kind, x, radius);
    for (int i = 0; i < 2000; ++i) {
      const Event q = random_event(rng, 3);
      const bool off_cone = q == x || !is_horismos(classify(x, q, kTol));
      CHECK(member(plain, q, kTol) == (member(dash, q, kTol) && off_cone));
    }
    // exact null displacements sit on the light cone itself
    const Event null_q = make_event({0.75, 0.75, 0, 0});
    CHECK_FALSE(member(plain, null_q, kTol));
    CHECK(member(dash, null_q, kTol) ==
          (is_bounded(dash_kind) ? euclidean_distance(x, null_q) < 1.0 : true));
  }
}

TEST_CASE("Z splits into ZT and ZS") {
  Rng rng(53);
  const Event x = origin(3);
  const BasicNbhd z = make_basic_nbhd(TopologyKind::Z, x, 1.0);
  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, x, 1.0);
  const BasicNbhd zs = make_basic_nbhd(TopologyKind::ZS, x, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const Event q = random_event(rng, 3);
    CHECK(member(z, q, kTol) == (member(zt, q, kTol) || member(zs, q, kTol)));
  }
}

TEST_CASE("diamond membership") {
  const Event a = make_event({-1, 0, 0, 0});
  const Event b = make_event({1, 0, 0, 0});
  const BasicNbhd diamond = alexandrov_nbhd(a, b);
  CHECK(member(diamond, origin(3), kTol));
  CHECK_FALSE(member(diamond, make_event({0, 2, 0, 0}), kTol));
  // arithmetic oracle with delta = 1 tips: both legs timelike future
  const Event q = make_event({0, 0.5, 0, 0});
  CHECK(quadratic_form(q - a) > 0);
  CHECK(quadratic_form(b - q) > 0);
  CHECK(member(diamond, q, kTol));
  CHECK_THROWS_AS(alexandrov_nbhd(b, a), std::invalid_argument);
  CHECK_THROWS_AS(alexandrov_nbhd(a, make_event({0, 3, 0, 0})), std::invalid_argument);
}

TEST_CASE("schedules are nested") {
  Rng rng(59);
  const Event x = random_event(rng, 3);
  for (TopologyKind k : all_topology_kinds()) {
    const auto sets = local_schedule(k, x, Schedule{1.0, 4}, default_partition(3));
    for (int i = 0; i < 500; ++i) {
      Event q = x;
      for (int c = 0; c <= 3; ++c) {
        q.c[static_cast<std::size_t>(c)] += rng.uniform(-2.0, 2.0);
      }
      for (std::size_t j = 1; j < sets.size(); ++j) {
        if (member(sets[j], q, kTol)) CHECK(member(sets[j - 1], q, kTol));
      }
    }
  }
}

TEST_CASE("traces on lines") {
  const Event o = origin(3);
  Displacement time_dir, space_dir;
  time_dir.n = space_dir.n = 3;
  time_dir.v[0] = 1.0;
  space_dir.v[1] = 1.0;
  const int samples = 10001;
  const double step = 4.0 / (samples - 1);

  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, o, 1.0);
  const auto t_runs = trace_on_line(zt, o, time_dir, -2.0, 2.0, samples, kTol);
  REQUIRE(t_runs.size() == 1);
  CHECK(std::abs(t_runs[0].lo + 1.0) <= 2 * step);
  CHECK(std::abs(t_runs[0].hi - 1.0) <= 2 * step);

  const BasicNbhd zs = make_basic_nbhd(TopologyKind::ZS, o, 1.0);
  const auto apex_runs = trace_on_line(zs, o, time_dir, -2.0, 2.0, samples, kTol);
  REQUIRE(apex_runs.size() == 1);
  CHECK(apex_runs[0].lo == 0.0);
  CHECK(apex_runs[0].hi == 0.0);

  const auto s_runs = trace_on_line(zs, o, space_dir, -2.0, 2.0, samples, kTol);
  REQUIRE(s_runs.size() == 1);
  CHECK(std::abs(s_runs[0].lo + 1.0) <= 2 * step);
  CHECK(std::abs(s_runs[0].hi - 1.0) <= 2 * step);

  Displacement zero;
  zero.n = 3;
  CHECK_THROWS_AS(trace_on_line(zt, o, zero, -2.0, 2.0, 101, kTol), std::invalid_argument);
}

TEST_CASE("minimal sets are equivariant under sampled homotheties") {
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    const Event x = random_event(rng, 3);
    Event q = random_event(rng, 3);
    const double q_form = quadratic_form(q - x);
    if (std::abs(q_form) < 1e-4 * std::max(1.0, (q - x).norm2())) continue;
    const GTransform g = random_g(rng, 3);
    const Event gx = apply_transform(g, x);
    const Event gq = apply_transform(g, q);
    for (TopologyKind k : {TopologyKind::IntHorismos, TopologyKind::IntSpacelike,
                           TopologyKind::IntCausal}) {
      const BasicNbhd at_x = make_basic_nbhd(k, x);
      const BasicNbhd at_gx = make_basic_nbhd(k, gx);
      CHECK(member(at_x, q, kTol) == member(at_gx, gq, kTol));
    }
  }
}
