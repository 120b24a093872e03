#include <cmath>

#include "conetop/format.hpp"
#include "conetop/report.hpp"
#include "conetop/rng.hpp"

namespace conetop {

namespace {

ReportRow check_row(const std::string& suite, const std::string& case_id, long violations,
                    long cases, const std::string& note = "") {
  ReportRow row;
  row.suite = suite;
  row.case_id = case_id;
  row.verdict = violations == 0 ? "pass" : "fail";
  row.detail = std::to_string(violations) + " violations in " + std::to_string(cases) + " checks";
  row.note = note;
  return row;
}

Displacement future_timelike(Rng& rng, int dim) {
  const double r = rng.uniform(0.1, 1.5);
  const double delta = rng.uniform(0.05, 1.0);
  const auto u = random_unit_spatial(rng, dim);
  Displacement d;
  d.n = dim;
  d.v[0] = r * (1.0 + delta);
  for (int i = 0; i < dim; ++i) d.v[static_cast<std::size_t>(i + 1)] = r * u[static_cast<std::size_t>(i)];
  return d;
}

Displacement future_null(Rng& rng, int dim) {
  const double r = rng.uniform(0.1, 1.5);
  const auto u = random_unit_spatial(rng, dim);
  Displacement d;
  d.n = dim;
  d.v[0] = r;
  for (int i = 0; i < dim; ++i) d.v[static_cast<std::size_t>(i + 1)] = r * u[static_cast<std::size_t>(i)];
  return d;
}

/// Random displacement whose classification sits at least 1e-4 * scale away
/// from the band, so it survives any sampled transform without flipping.
Displacement robust_displacement(Rng& rng, int dim) {
  while (true) {
    Displacement d;
    d.n = dim;
    for (int i = 0; i <= dim; ++i) d.v[static_cast<std::size_t>(i)] = rng.uniform(-2.0, 2.0);
    if (d.zero()) continue;
    const double q = quadratic_form(d);
    if (std::abs(q) >= 1e-4 * std::max(1.0, d.norm2())) return d;
  }
}

Event box_sample_around(Rng& rng, const Event& x, double half) {
  Event q = x;
  for (int i = 0; i <= x.n; ++i) {
    q.c[static_cast<std::size_t>(i)] += rng.uniform(-half, half);
  }
  return q;
}

Partition suite_partition(const ExperimentConfig& c) {
  std::vector<double> axis(c.partition_axis.begin(), c.partition_axis.end());
  axis.resize(static_cast<std::size_t>(c.dim), 0.0);
  double norm2 = 0.0;
  for (double v : axis) norm2 += v * v;
  if (norm2 == 0.0) axis[0] = 1.0;
  return make_partition(std::span<const double>(axis.data(), axis.size()));
}

EventSequence named_sequence(const char* name, int dim, int n_max) {
  Displacement d;
  d.n = dim;
  if (std::string(name) == "null") d.v = {1.0, 1.0, 0.0, 0.0};
  if (std::string(name) == "timelike") d.v = {1.0, 0.0, 0.0, 0.0};
  if (std::string(name) == "spacelike") d.v = {0.0, 1.0, 0.0, 0.0};
  return ray_sequence(d, n_max);
}

}  // namespace

std::vector<ReportRow> suite_relation_algebra(const ExperimentConfig& c) {
  const char* suite = "relation-algebra";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<ReportRow> rows;

  long viol = 0;
  for (int i = 0; i < c.samples; ++i) {
    const Event x = random_event(rng, c.dim);
    if (related(chrono(), x, x, tol)) ++viol;
    if (related(horismos_irr(), x, x, tol)) ++viol;
    if (classify(x, x, tol) != CausalClass::Equal) ++viol;
  }
  rows.push_back(check_row(suite, "irreflexive", viol, c.samples));

  viol = 0;
  for (int i = 0; i < c.samples; ++i) {
    const Event x = random_event(rng, c.dim);
    const Event y = random_event(rng, c.dim);
    if (classify(x, y, tol) != time_reverse(classify(y, x, tol))) ++viol;
  }
  rows.push_back(check_row(suite, "time-reversal", viol, c.samples));

  viol = 0;
  for (int i = 0; i < c.samples; ++i) {
    const Event x = random_event(rng, c.dim);
    const Event y = translate(x, future_timelike(rng, c.dim));
    const Event z = translate(y, future_timelike(rng, c.dim));
    if (classify(x, y, tol) != CausalClass::ChronoFuture) ++viol;
    if (classify(x, z, tol) != CausalClass::ChronoFuture) ++viol;
  }
  rows.push_back(check_row(suite, "transitivity-chrono", viol, c.samples));

  viol = 0;
  for (int i = 0; i < c.samples; ++i) {
    const Event x = random_event(rng, c.dim);
    const auto step = [&](const Event& from) {
      return translate(from, rng.unit() < 0.5 ? future_null(rng, c.dim)
                                              : future_timelike(rng, c.dim));
    };
    const Event y = step(x);
    const Event z = step(y);
    const CausalClass cz = classify(x, z, tol);
    if (cz != CausalClass::ChronoFuture && cz != CausalClass::HorismosFuture) ++viol;
  }
  rows.push_back(check_row(suite, "transitivity-causal", viol, c.samples));

  viol = 0;
  const int transforms = 100;
  const int pairs_per_g = std::max(1, c.samples / transforms);
  long inv_cases = 0;
  for (int gi = 0; gi < transforms; ++gi) {
    const GTransform g = random_g(rng, c.dim);
    for (int i = 0; i < pairs_per_g; ++i) {
      const Event x = random_event(rng, c.dim);
      Event y;
      const double pick = rng.unit();
      if (pick < 0.6) {
        y = translate(x, robust_displacement(rng, c.dim));
      } else if (pick < 0.9) {
        Displacement d = future_null(rng, c.dim);
        if (rng.unit() < 0.5) d = scaled(d, -1.0);
        y = translate(x, d);
      } else {
        y = x;
      }
      ++inv_cases;
      if (classify(x, y, tol) !=
          classify(apply_transform(g, x, tol), apply_transform(g, y, tol), tol)) {
        ++viol;
      }
    }
  }
  rows.push_back(check_row(suite, "g-invariance", viol, inv_cases));

  viol = 0;
  for (int i = 0; i < c.samples; ++i) {
    Displacement v;
    v.n = c.dim;
    for (int k = 0; k <= c.dim; ++k) v.v[static_cast<std::size_t>(k)] = rng.uniform(-2.0, 2.0);
    const GTransform g = random_g(rng, c.dim);
    const Displacement w = apply_linear(g, v, tol);
    const double expected = g.dilatation * g.dilatation * quadratic_form(v);
    const double slack = 1e-8 * std::max({1.0, v.norm2(), w.norm2()});
    if (std::abs(quadratic_form(w) - expected) > slack) ++viol;
    const double s = rng.uniform(0.25, 4.0);
    const double ds = quadratic_form(scaled(v, s)) - s * s * quadratic_form(v);
    if (std::abs(ds) > 1e-12 * s * s * std::max(1.0, v.norm2())) ++viol;
  }
  rows.push_back(check_row(suite, "q-scaling", viol, c.samples));

  return rows;
}

std::vector<ReportRow> suite_interval_equivalence(const ExperimentConfig& c) {
  const char* suite = "interval-equivalence";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0x5851f42d4c957f2dULL);
  std::vector<ReportRow> rows;

  const Event x = random_event(rng, c.dim);
  const double eps = c.eps0;

  std::vector<Event> qs;
  qs.push_back(x);
  for (int i = 1; i < c.samples; ++i) qs.push_back(box_sample_around(rng, x, 3.0));

  std::vector<Partition> partitions;
  partitions.push_back(suite_partition(c));
  for (int i = 1; i < 10; ++i) {
    const auto axis = random_unit_spatial(rng, c.dim);
    partitions.push_back(
        make_partition(std::span<const double>(axis.data(), static_cast<std::size_t>(c.dim))));
  }

  long closed_viol = 0, zt_viol = 0, invar_viol = 0;
  std::vector<std::uint8_t> reference;
  reference.resize(qs.size());
  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, x, eps);
  for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
    const Relation leq = spacelike_leq(partitions[pi]);
    const IntervalNbhd minimal = minimal_interval_nbhd(leq, x);
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      const Event& q = qs[qi];
      const bool conj = subbasic_complement_contains(leq, x, SubbasicSide::Upper, q, tol) &&
                        subbasic_complement_contains(leq, x, SubbasicSide::Lower, q, tol);
      if (conj != member(minimal, q, tol)) ++closed_viol;
      const bool ball = euclidean_distance(x, q) < eps;
      if (member(zt, q, tol) != (conj && ball)) ++zt_viol;
      if (pi == 0) {
        reference[qi] = conj ? 1 : 0;
      } else if (reference[qi] != (conj ? 1 : 0)) {
        ++invar_viol;
      }
    }
  }
  const long per_partition = static_cast<long>(qs.size()) * static_cast<long>(partitions.size());
  rows.push_back(check_row(suite, "closed-form-vs-subbasic/SpacelikeLeq", closed_viol, per_partition));
  rows.push_back(check_row(suite, "theorem-route/zt-equals-minimal-cap-ball", zt_viol, per_partition));
  rows.push_back(check_row(suite, "partition-invariance", invar_viol,
                           static_cast<long>(qs.size()) * (static_cast<long>(partitions.size()) - 1)));

  // Alternative horismos bookkeeping: the full null cone in both the upper
  // and the lower set leaves the same minimal neighborhood.
  long conv_viol = 0;
  {
    const Partition& p = partitions.front();
    const IntervalNbhd minimal = minimal_interval_nbhd(spacelike_leq(p), x);
    for (const Event& q : qs) {
      bool alt;
      if (q == x) {
        alt = true;
      } else {
        const Displacement d = q - x;
        const CausalClass cls = classify(d, tol);
        const int side = cls == CausalClass::Spacelike ? partition_side(d, p, tol) : 0;
        const bool upper_alt = (cls == CausalClass::Spacelike && side > 0) || is_horismos(cls);
        const bool lower_alt = (cls == CausalClass::Spacelike && side < 0) || is_horismos(cls);
        alt = !upper_alt && !lower_alt;
      }
      if (alt != member(minimal, q, tol)) ++conv_viol;
    }
  }
  rows.push_back(check_row(suite, "horismos-convention", conv_viol, static_cast<long>(qs.size())));

  long causal_viol = 0, hor_viol = 0;
  {
    const Relation ci = causal_irr();
    const Relation hi = horismos_irr();
    const IntervalNbhd min_ci = minimal_interval_nbhd(ci, x);
    const IntervalNbhd min_hi = minimal_interval_nbhd(hi, x);
    for (const Event& q : qs) {
      const bool conj_ci = subbasic_complement_contains(ci, x, SubbasicSide::Upper, q, tol) &&
                           subbasic_complement_contains(ci, x, SubbasicSide::Lower, q, tol);
      if (conj_ci != member(min_ci, q, tol)) ++causal_viol;
      const bool conj_hi = subbasic_complement_contains(hi, x, SubbasicSide::Upper, q, tol) &&
                           subbasic_complement_contains(hi, x, SubbasicSide::Lower, q, tol);
      if (conj_hi != member(min_hi, q, tol)) ++hor_viol;
    }
  }
  rows.push_back(check_row(suite, "closed-form-vs-subbasic/CausalIrr", causal_viol,
                           static_cast<long>(qs.size())));
  rows.push_back(check_row(suite, "closed-form-vs-subbasic/HorismosIrr", hor_viol,
                           static_cast<long>(qs.size())));

  long split_viol = 0;
  long split_cases = 0;
  {
    const Partition& p = partitions.front();
    const ConeRegion plus = cone_region(ConeKind::SpaceConePlus, x, p);
    const ConeRegion minus = cone_region(ConeKind::SpaceConeMinus, x, p);
    for (const Event& q : qs) {
      if (classify(x, q, tol) != CausalClass::Spacelike) continue;
      ++split_cases;
      if (in_region(plus, q, tol) == in_region(minus, q, tol)) ++split_viol;
    }
  }
  rows.push_back(check_row(suite, "space-cone-partition", split_viol, split_cases));

  return rows;
}

std::vector<ReportRow> suite_pairings(const ExperimentConfig& c) {
  const char* suite = "pairings";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0xbf58476d1ce4e5b9ULL);
  std::vector<ReportRow> rows;

  const Event x = random_event(rng, c.dim);
  const double eps = c.eps0;
  const BasicNbhd ball = make_basic_nbhd(TopologyKind::Manifold, x, eps);
  const BasicNbhd z = make_basic_nbhd(TopologyKind::Z, x, eps);
  const BasicNbhd zs = make_basic_nbhd(TopologyKind::ZS, x, eps);
  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, x, eps);
  const BasicNbhd min_hor = to_basic_nbhd(minimal_interval_nbhd(horismos_irr(), x));
  const BasicNbhd min_causal = to_basic_nbhd(minimal_interval_nbhd(causal_irr(), x));
  const BasicNbhd min_space =
      to_basic_nbhd(minimal_interval_nbhd(spacelike_leq(suite_partition(c)), x));

  long z_viol = 0, zs_viol = 0, zt_viol = 0;
  for (int i = 0; i < c.samples; ++i) {
    const Event q = i == 0 ? x : box_sample_around(rng, x, 3.0);
    if (member(z, q, tol) != intersection_member(min_hor, ball, q, tol)) ++z_viol;
    if (member(zs, q, tol) != intersection_member(min_causal, ball, q, tol)) ++zs_viol;
    if (member(zt, q, tol) != intersection_member(min_space, ball, q, tol)) ++zt_viol;
  }
  rows.push_back(check_row(suite, "z-equals-horismos-interval-cap-manifold", z_viol, c.samples));
  rows.push_back(check_row(suite, "zs-equals-causal-interval-cap-manifold", zs_viol, c.samples));
  rows.push_back(check_row(suite, "zt-equals-spacelike-interval-cap-manifold", zt_viol, c.samples));
  return rows;
}

std::vector<ReportRow> suite_dashed(const ExperimentConfig& c) {
  const char* suite = "dashed";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0x94d049bb133111ebULL);
  std::vector<ReportRow> rows;

  const Event x = random_event(rng, c.dim);
  const double eps = c.eps0;
  const std::pair<TopologyKind, TopologyKind> pairs[] = {
      {TopologyKind::ZT, TopologyKind::ZTDash},
      {TopologyKind::ZS, TopologyKind::ZSDash},
      {TopologyKind::IntSpacelike, TopologyKind::IntSpacelikeDash},
      {TopologyKind::IntCausal, TopologyKind::IntCausalDash},
  };

  std::vector<Event> qs;
  qs.push_back(x);
  for (int i = 1; i < c.samples; ++i) qs.push_back(box_sample_around(rng, x, 3.0));

  for (const auto& [plain_kind, dash_kind] : pairs) {
    const auto radius = is_bounded(plain_kind) ? std::optional<double>(eps) : std::nullopt;
    const BasicNbhd plain = make_basic_nbhd(plain_kind, x, radius);
    const BasicNbhd dash = make_basic_nbhd(dash_kind, x, radius);
    long viol = 0;
    for (const Event& q : qs) {
      const bool off_lightcone = q == x || !is_horismos(classify(x, q, tol));
      if (member(plain, q, tol) != (member(dash, q, tol) && off_lightcone)) ++viol;
    }
    rows.push_back(check_row(suite,
                             std::string(to_string(plain_kind)) + "-vs-" + to_string(dash_kind),
                             viol, static_cast<long>(qs.size())));
  }

  const BasicNbhd z = make_basic_nbhd(TopologyKind::Z, x, eps);
  const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, x, eps);
  const BasicNbhd zs = make_basic_nbhd(TopologyKind::ZS, x, eps);
  long viol = 0;
  for (const Event& q : qs) {
    if (member(z, q, tol) != (member(zt, q, tol) || member(zs, q, tol))) ++viol;
  }
  rows.push_back(check_row(suite, "z-decomposes-into-zt-union-zs", viol,
                           static_cast<long>(qs.size())));
  return rows;
}

std::vector<ReportRow> suite_alexandrov(const ExperimentConfig& c) {
  const char* suite = "alexandrov";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0xd6e8feb86659fd93ULL);
  std::vector<ReportRow> rows;

  const int centers = std::max(1, c.samples / 10);
  const double eps = c.eps0;
  const double delta = eps / 2.0;

  long in_ball_viol = 0;
  long in_ball_cases = 0;
  for (int i = 0; i < centers; ++i) {
    const Event x = random_event(rng, c.dim);
    Displacement up;
    up.n = c.dim;
    up.v[0] = delta;
    const BasicNbhd diamond = alexandrov_nbhd(translate(x, scaled(up, -1.0)), translate(x, up), tol);
    for (int k = 0; k < 10; ++k) {
      const Event q = box_sample_around(rng, x, delta * 1.5);
      if (!member(diamond, q, tol)) continue;
      ++in_ball_cases;
      if (!(euclidean_distance(x, q) < eps)) ++in_ball_viol;
    }
  }
  rows.push_back(check_row(suite, "diamond-inside-ball", in_ball_viol, in_ball_cases));

  long in_diamond_viol = 0;
  long in_diamond_cases = 0;
  for (int i = 0; i < centers; ++i) {
    const Event a = random_event(rng, c.dim);
    const Displacement m = future_timelike(rng, c.dim);
    const Event b = translate(a, scaled(m, 2.0));
    const Event mid = translate(a, m);
    const double qm = quadratic_form(m);
    const double rho = std::min(0.25 * qm / m.norm(), 0.5 * m.t());
    const BasicNbhd diamond = alexandrov_nbhd(a, b, tol);
    for (int k = 0; k < 10; ++k) {
      Event q;
      while (true) {
        q = box_sample_around(rng, mid, rho);
        if (euclidean_distance(mid, q) < rho) break;
      }
      ++in_diamond_cases;
      if (!member(diamond, q, tol)) ++in_diamond_viol;
    }
  }
  rows.push_back(check_row(suite, "ball-inside-diamond", in_diamond_viol, in_diamond_cases));
  return rows;
}

std::vector<ReportRow> suite_traces(const ExperimentConfig& c) {
  const char* suite = "traces";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0xa3ec647659359acdULL);
  std::vector<ReportRow> rows;

  const Event x = random_event(rng, c.dim);
  Displacement time_dir, space_dir;
  time_dir.n = space_dir.n = c.dim;
  time_dir.v[0] = 1.0;
  space_dir.v[1] = 1.0;

  const int samples = 10001;  // puts s = 0 exactly on the grid over [-2, 2]
  const double step = 4.0 / static_cast<double>(samples - 1);

  long open_interval_viol = 0, space_interval_viol = 0, apex_viol = 0;
  int cases = 0;
  for (double eps : {c.eps0, c.eps0 / 2.0, c.eps0 / 4.0}) {
    ++cases;
    const BasicNbhd zt = make_basic_nbhd(TopologyKind::ZT, x, eps);
    const BasicNbhd zs = make_basic_nbhd(TopologyKind::ZS, x, eps);

    const auto t_trace = trace_on_line(zt, x, time_dir, -2.0, 2.0, samples, tol);
    if (t_trace.size() != 1 || std::abs(t_trace[0].lo + eps) > 2.0 * step ||
        std::abs(t_trace[0].hi - eps) > 2.0 * step) {
      ++open_interval_viol;
    }

    const auto s_trace = trace_on_line(zs, x, space_dir, -2.0, 2.0, samples, tol);
    if (s_trace.size() != 1 || std::abs(s_trace[0].lo + eps) > 2.0 * step ||
        std::abs(s_trace[0].hi - eps) > 2.0 * step) {
      ++space_interval_viol;
    }

    const auto apex_trace = trace_on_line(zt, x, space_dir, -2.0, 2.0, samples, tol);
    if (apex_trace.size() != 1 || std::abs(apex_trace[0].lo) > step / 2.0 ||
        std::abs(apex_trace[0].hi) > step / 2.0) {
      ++apex_viol;
    }
  }
  rows.push_back(check_row(suite, "zt-on-time-axis-is-open-interval", open_interval_viol, cases));
  rows.push_back(check_row(suite, "zs-on-space-axis-is-open-interval", space_interval_viol, cases));
  rows.push_back(check_row(suite, "zt-on-spacelike-line-is-apex", apex_viol, cases));
  return rows;
}

std::vector<ReportRow> suite_nesting(const ExperimentConfig& c) {
  const char* suite = "nesting";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0xc2b2ae3d27d4eb4fULL);
  std::vector<ReportRow> rows;

  const Event x = random_event(rng, c.dim);
  long viol = 0;
  long cases = 0;
  const int per_kind = std::max(1, c.samples / 10);
  for (TopologyKind k : all_topology_kinds()) {
    const auto sets = local_schedule(k, x, c.schedule(), suite_partition(c));
    for (int i = 0; i < per_kind; ++i) {
      const Event q = box_sample_around(rng, x, 2.0);
      for (std::size_t j = 1; j < sets.size(); ++j) {
        ++cases;
        if (member(sets[j], q, tol) && !member(sets[j - 1], q, tol)) ++viol;
      }
    }
  }
  rows.push_back(check_row(suite, "schedules-shrink", viol, cases));
  return rows;
}

std::vector<ReportRow> suite_equivariance(const ExperimentConfig& c) {
  const char* suite = "equivariance";
  const TolerancePolicy tol = c.tolerance();
  Rng rng(c.seed ^ 0x2545f4914f6cdd1dULL);
  std::vector<ReportRow> rows;

  const ConeKind cone_kinds[] = {ConeKind::TimeConeBoth, ConeKind::SpaceCone,
                                 ConeKind::LightConeBoth, ConeKind::CausalConeBoth,
                                 ConeKind::ClosedSpaceCone};

  long cone_viol = 0, minimal_viol = 0;
  long cone_cases = 0, minimal_cases = 0;
  const int reps = std::max(1, c.samples / 10);
  for (int i = 0; i < reps; ++i) {
    const Event x = random_event(rng, c.dim);
    Event q;
    if (rng.unit() < 0.7) {
      q = translate(x, robust_displacement(rng, c.dim));
    } else {
      Displacement d = future_null(rng, c.dim);
      if (rng.unit() < 0.5) d = scaled(d, -1.0);
      q = translate(x, d);
    }
    const GTransform g = random_g(rng, c.dim);
    const Event gx = apply_transform(g, x, tol);
    const Event gq = apply_transform(g, q, tol);
    for (ConeKind k : cone_kinds) {
      ++cone_cases;
      if (in_region(cone_region(k, x), q, tol) != in_region(cone_region(k, gx), gq, tol)) {
        ++cone_viol;
      }
    }
    const Relation rels[] = {causal_irr(), horismos_irr(),
                             spacelike_leq(suite_partition(c))};
    for (const Relation& r : rels) {
      ++minimal_cases;
      if (member(minimal_interval_nbhd(r, x), q, tol) !=
          member(minimal_interval_nbhd(r, gx), gq, tol)) {
        ++minimal_viol;
      }
    }
  }
  rows.push_back(check_row(suite, "cone-regions", cone_viol, cone_cases));
  rows.push_back(check_row(suite, "minimal-interval-sets", minimal_viol, minimal_cases));

  long half_viol = 0;
  long half_cases = 0;
  for (int i = 0; i < reps; ++i) {
    const Event x = random_event(rng, c.dim);
    const auto axis = random_unit_spatial(rng, c.dim);
    const Partition e =
        make_partition(std::span<const double>(axis.data(), static_cast<std::size_t>(c.dim)));
    const Event q = translate(x, robust_displacement(rng, c.dim));
    const Displacement d = q - x;
    if (classify(d, tol) != CausalClass::Spacelike) continue;
    double along = 0.0;
    for (int k = 0; k < c.dim; ++k) {
      along += d.v[static_cast<std::size_t>(k + 1)] * e.axis[static_cast<std::size_t>(k)];
    }
    if (std::abs(along) < 1e-4 * std::max(1.0, d.norm2())) continue;  // stay off the tie set
    const GTransform g = random_rotation_translation(rng, c.dim);
    const Partition ge = rotate_axis(g, e, tol);
    const Event gx = apply_transform(g, x, tol);
    const Event gq = apply_transform(g, q, tol);
    ++half_cases;
    if (in_region(cone_region(ConeKind::SpaceConePlus, x, e), q, tol) !=
        in_region(cone_region(ConeKind::SpaceConePlus, gx, ge), gq, tol)) {
      ++half_viol;
    }
  }
  rows.push_back(check_row(suite, "half-cones-under-rotations", half_viol, half_cases));
  return rows;
}

std::vector<ReportRow> suite_discriminators(const ExperimentConfig& c) {
  const char* suite = "discriminators";
  std::vector<ReportRow> rows;
  const Partition part = suite_partition(c);
  const auto expectations = discriminator_expectations();

  // The pattern is frozen at the reference parameters: horizon 256, radii
  // 1, 1/2, ..., 1/32, default tolerance. Other horizons shift the Alexandrov
  // thresholds past the tail.
  const TolerancePolicy tol = kDiscriminatorTolerance;
  for (const char* name : {"null", "timelike", "spacelike"}) {
    const EventSequence seq = named_sequence(name, c.dim, kDiscriminatorHorizon);
    long viol = 0;
    long cases = 0;
    std::string detail;
    for (const auto& e : expectations) {
      if (e.sequence != name) continue;
      ++cases;
      const Verdict v = converges(seq, e.kind, kDiscriminatorSchedule, tol, part);
      if (v.outcome != e.expected) {
        ++viol;
        detail += std::string(to_string(e.kind)) + " got " + to_string(v.outcome) + "; ";
      }
    }
    rows.push_back(check_row(suite, std::string(name) + "-direction", viol, cases, detail));
  }
  return rows;
}

std::vector<ReportRow> suite_lct_consistency(const ExperimentConfig& c) {
  const char* suite = "lct-consistency";
  const TolerancePolicy tol = c.tolerance();
  std::vector<ReportRow> rows;

  const CurveFamily fam = rotating_null_geodesics(c.theta0, c.s_max);
  const Event p = make_event({1.0, 1.0, 0.0});

  // The emptiness certificates against the time-cone recipes are linear in
  // the parameter: Q(s) = -2 s (1 - cos(theta_n)) at p = (1, 1, 0).
  long cert_viol = 0;
  long cert_cases = 0;
  const BasicNbhd zt_at_p = make_basic_nbhd(TopologyKind::ZT, p, 0.5);
  const BasicNbhd min_at_p = make_basic_nbhd(TopologyKind::IntSpacelike, p);
  for (int n : {1, 4, 16, 64, 256}) {
    if (n > c.n_max) continue;
    const double theta = c.theta0 / static_cast<double>(n);
    const double expected_b = -2.0 * (1.0 - std::cos(theta));
    const Curve gn = fam.curve(n);
    for (const BasicNbhd* b : {&zt_at_p, &min_at_p}) {
      ++cert_cases;
      const MeetResult r = curve_meets_nbhd(gn, *b, tol);
      const bool ok = !r.meets && r.analytic && std::abs(r.q_quadratic.a) <= 1e-12 &&
                      std::abs(r.q_quadratic.b - expected_b) <= 1e-12 &&
                      std::abs(r.q_quadratic.c) <= 1e-12 &&
                      certificate_reverifies(gn, *b, tol, 512, 10);
      if (!ok) ++cert_viol;
    }
  }
  rows.push_back(check_row(suite, "rotating-null-certificates-10x", cert_viol, cert_cases));

  // Refutation monotonicity: longer horizons and finer schedules keep
  // refuting what was already refuted.
  long mono_viol = 0;
  long mono_cases = 0;
  {
    const Partition part = suite_partition(c);
    Displacement null_dir;
    null_dir.n = c.dim;
    null_dir.v = {1.0, 1.0, 0.0, 0.0};
    for (int n_max : {64, c.n_max}) {
      for (int steps : {3, 6}) {
        ++mono_cases;
        const EventSequence seq = ray_sequence(null_dir, n_max);
        const Verdict v = converges(seq, TopologyKind::ZT, Schedule{c.eps0, steps}, tol, part);
        if (v.outcome != Outcome::Refuted) ++mono_viol;
      }
    }
    LctParams params;
    params.schedule = Schedule{c.eps0, c.lct_schedule_steps};
    params.gamma_samples = c.gamma_samples;
    for (int n_max : {64, c.n_max}) {
      ++mono_cases;
      params.horizon = Horizon{n_max, c.tail_fraction};
      const Verdict v = limit_curve_check(fam, fam.limit_curve(), TopologyKind::ZT,
                                          LimitDefn::D1, params, tol);
      if (v.outcome != Outcome::Refuted) ++mono_viol;
    }
  }
  rows.push_back(check_row(suite, "refutation-monotonicity", mono_viol, mono_cases));

  // Dashed sets contain their plain versions, so a dashed refutation forces
  // the plain one.
  long dom_viol = 0;
  long dom_cases = 0;
  {
    const Partition part = suite_partition(c);
    for (const char* name : {"null", "timelike", "spacelike"}) {
      const EventSequence seq = named_sequence(name, c.dim, c.n_max);
      for (TopologyKind dash :
           {TopologyKind::ZTDash, TopologyKind::ZSDash, TopologyKind::IntSpacelikeDash,
            TopologyKind::IntCausalDash}) {
        ++dom_cases;
        const Verdict vd = converges(seq, dash, c.schedule(), tol, part);
        if (vd.outcome != Outcome::Refuted) continue;
        const Verdict vp = converges(seq, *undashed_of(dash), c.schedule(), tol, part);
        if (vp.outcome != Outcome::Refuted) ++dom_viol;
      }
    }
  }
  rows.push_back(check_row(suite, "dashed-dominance", dom_viol, dom_cases));

  long d2_viol = 0;
  long d2_cases = 0;
  {
    LctParams params;
    params.schedule = Schedule{c.eps0, c.lct_schedule_steps};
    params.gamma_samples = c.gamma_samples;
    params.horizon = Horizon{c.n_max, c.tail_fraction};
    for (TopologyKind k : {TopologyKind::Manifold, TopologyKind::Z, TopologyKind::ZT}) {
      ++d2_cases;
      const Verdict v1 =
          limit_curve_check(fam, fam.limit_curve(), k, LimitDefn::D1, params, tol);
      if (v1.outcome != Outcome::Converges) continue;
      const Verdict v2 =
          limit_curve_check(fam, fam.limit_curve(), k, LimitDefn::D2, params, tol);
      if (v2.outcome != Outcome::Converges) ++d2_viol;
    }
  }
  rows.push_back(check_row(suite, "d2-implied-by-d1", d2_viol, d2_cases));

  return rows;
}

}  // namespace conetop
