#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "conetop/geometry.hpp"
#include "conetop/rng.hpp"
#include "conetop/transform.hpp"

using namespace conetop;

TEST_CASE("quadratic form on unit and null vectors") {
  CHECK(quadratic_form(make_displacement({1.0, 0.0, 0.0, 0.0})) == 1.0);
  CHECK(quadratic_form(make_displacement({1.0, 1.0, 0.0, 0.0})) == 0.0);

  // direct arithmetic oracle for a balanced null-ish vector
  const double t = 0.5, x = 0.3, y = 0.4, z = 0.0;
  const double oracle = t * t - (x * x + y * y + z * z);
  const double got = quadratic_form(make_displacement({t, x, y, z}));
  CHECK(got == oracle);
  CHECK(std::abs(got) < 1e-15);
}

TEST_CASE("classification of the canonical pairs") {
  const TolerancePolicy tol;
  const Event o = origin(3);
  CHECK(classify(o, make_event({1.0, 0.0, 0.0, 0.0}), tol) == CausalClass::ChronoFuture);
  CHECK(classify(o, make_event({1.0, 1.0, 0.0, 0.0}), tol) == CausalClass::HorismosFuture);
  CHECK(classify(o, make_event({0.0, 1.0, 0.0, 0.0}), tol) == CausalClass::Spacelike);
  CHECK(classify(o, o, tol) == CausalClass::Equal);
  CHECK(classify(o, make_event({-1.0, 0.0, 0.0, 0.0}), tol) == CausalClass::ChronoPast);
  CHECK(classify(o, make_event({-1.0, -1.0, 0.0, 0.0}), tol) == CausalClass::HorismosPast);
  CHECK_THROWS_AS(classify(origin(2), origin(3), tol), std::invalid_argument);
}

TEST_CASE("time reversal duality on seeded pairs") {
  const TolerancePolicy tol;
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Event x = random_event(rng, 3);
    const Event y = random_event(rng, 3);
    CHECK(classify(x, y, tol) == time_reverse(classify(y, x, tol)));
  }
}

TEST_CASE("boost by 0.6 along x") {
  const Mat4 lambda = boost_matrix(3, {1.0, 0.0, 0.0}, 0.6);
  GTransform g;
  g.lorentz = lambda;
  const Event in = make_event({1.0, 0.0, 0.0, 0.0});
  const Event out = apply_transform(g, in);
  // gamma = 1.25: t' = gamma (t - v x), x' = gamma (x - v t)
  CHECK(out.c[0] == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(out.c[1] == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(out.c[2] == 0.0);
  CHECK(quadratic_form(out - origin(3)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identity and pure translation") {
  const Event x = make_event({0.3, -1.0, 2.0, 0.5});
  CHECK(apply_transform(identity_transform(3), x) == x);
  const Event moved =
      apply_transform(translation_transform(make_displacement({1.0, 1.0, 1.0, 1.0})), origin(3));
  CHECK(moved == make_event({1.0, 1.0, 1.0, 1.0}));
}

TEST_CASE("non-Lorentz matrices are rejected") {
  GTransform g;
  g.lorentz(0, 0) = 2.0;
  CHECK_THROWS_AS(apply_transform(g, origin(3)), std::invalid_argument);
  g = identity_transform(3);
  g.dilatation = -1.0;
  CHECK_THROWS_AS(apply_transform(g, origin(3)), std::invalid_argument);
}

TEST_CASE("seeded generators are deterministic") {
  Rng a(1), b(1), c(2);
  bool all_equal = true;
  bool any_differ = false;
  for (int i = 0; i < 16; ++i) {
    const double va = a.unit(), vb = b.unit(), vc = c.unit();
    all_equal = all_equal && va == vb;
    any_differ = any_differ || va != vc;
  }
  CHECK(all_equal);
  CHECK(any_differ);

  Rng e1(5), e2(5);
  CHECK(random_event(e1, 3) == random_event(e2, 3));
}

TEST_CASE("random transforms satisfy the Lorentz identity") {
  // independent matrix oracle: lambda^T eta lambda compared entrywise
  auto oracle = [](const Mat4& lambda) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
          const double eta_k = k == 0 ? 1.0 : -1.0;
          acc += lambda(k, i) * eta_k * lambda(k, j);
        }
        const double want = i != j ? 0.0 : (i == 0 ? 1.0 : -1.0);
        worst = std::max(worst, std::abs(acc - want));
      }
    }
    return worst;
  };
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const GTransform g = random_g(rng, 3);
    CHECK(oracle(g.lorentz) <= 1e-9);
  }
  for (int dim : {1, 2}) {
    const GTransform g = random_g(rng, dim);
    CHECK(oracle(g.lorentz) <= 1e-9);
  }
}

TEST_CASE("classification is invariant under sampled homotheties") {
  const TolerancePolicy tol;
  Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Event x = random_event(rng, 3);
    Event y = random_event(rng, 3);
    const double q = quadratic_form(y - x);
    if (std::abs(q) < 1e-4 * std::max(1.0, (y - x).norm2())) continue;  // stay off the band
    const GTransform g = random_g(rng, 3);
    CHECK(classify(x, y, tol) ==
          classify(apply_transform(g, x), apply_transform(g, y), tol));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("sampled transitivity of the chronological order") {
  const TolerancePolicy tol;
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    Event x = random_event(rng, 3);
    const double r1 = rng.uniform(0.1, 1.0), r2 = rng.uniform(0.1, 1.0);
    const auto u1 = random_unit_spatial(rng, 3), u2 = random_unit_spatial(rng, 3);
    const Event y = translate(
        x, make_displacement({r1 * 1.5, r1 * u1[0], r1 * u1[1], r1 * u1[2]}));
    const Event z = translate(
        y, make_displacement({r2 * 1.5, r2 * u2[0], r2 * u2[1], r2 * u2[2]}));
    REQUIRE(classify(x, y, tol) == CausalClass::ChronoFuture);
    CHECK(classify(x, z, tol) == CausalClass::ChronoFuture);
  }
}

TEST_CASE("dilatations scale the form quadratically") {
  Rng rng(19);
  for (int i = 0; i < 1000; ++i) {
    Displacement v;
    v.n = 3;
    for (int k = 0; k < 4; ++k) v.v[static_cast<std::size_t>(k)] = rng.uniform(-2.0, 2.0);
    const double s = rng.uniform(0.25, 4.0);
    CHECK(quadratic_form(scaled(v, s)) ==
          doctest::Approx(s * s * quadratic_form(v)).epsilon(1e-12));
  }
}

TEST_CASE("event validation") {
  CHECK_THROWS_AS(make_event({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_event({1.0, 2.0, 3.0, 4.0, 5.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_event({std::nan(""), 0.0}), std::invalid_argument);
  CHECK(make_event({1.0, 2.0}).n == 1);
  CHECK(origin(2).n == 2);
}
