#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conetop/convergence.hpp"
#include "conetop/finite.hpp"
#include "conetop/report.hpp"
#include "conetop/topology.hpp"

namespace py = pybind11;
using namespace conetop;

namespace {

Event event_from(const std::vector<double>& coords) {
  return make_event(std::span<const double>(coords.data(), coords.size()));
}

TopologyKind kind_from(const std::string& name) {
  const auto k = parse_topology_kind(name);
  if (!k) throw std::invalid_argument("unknown topology kind: " + name);
  return *k;
}

BasicNbhd nbhd_from(const std::string& kind_name, const std::vector<double>& center,
                    std::optional<double> eps, std::optional<std::vector<double>> axis) {
  const TopologyKind kind = kind_from(kind_name);
  std::optional<Partition> part;
  if (axis) part = make_partition(std::span<const double>(axis->data(), axis->size()));
  return make_basic_nbhd(kind, event_from(center),
                         is_bounded(kind) ? eps : std::nullopt, part);
}

CurveFamily family_from(const std::string& name, double theta0, double v0, double s_max) {
  const auto k = parse_curve_family(name);
  if (!k) throw std::invalid_argument("unknown curve family: " + name);
  switch (*k) {
    case CurveFamilyKind::RotatingNullGeodesics: return rotating_null_geodesics(theta0, s_max);
    case CurveFamilyKind::ParallelNullLines: return parallel_null_lines(s_max);
    case CurveFamilyKind::TimelikeHyperbolae: return timelike_hyperbolae(s_max);
    case CurveFamilyKind::RotatingTimelikeLines: return rotating_timelike_lines(v0, s_max);
    case CurveFamilyKind::Polyline:
      throw std::invalid_argument("sampled polyline families cannot be named here");
  }
  throw std::logic_error("unreachable");
}

py::dict verdict_to_dict(const Verdict& v) {
  py::dict d;
  d["outcome"] = std::string(to_string(v.outcome));
  d["threshold_n"] = v.threshold_n;
  d["certificate"] = v.certificate;
  if (v.witness_nbhd) d["witness"] = describe(*v.witness_nbhd);
  if (v.witness_point) d["witness_point"] = format_event(*v.witness_point);
  return d;
}

}  // namespace

PYBIND11_MODULE(_conetop, m) {
  m.doc() = "cone topologies on Minkowski space: causal predicates, finite set "
            "algebra and convergence experiments";

  m.def("version", []() { return std::string(kToolVersion); });

  m.def(
      "quadratic_form",
      [](const std::vector<double>& v) {
        return quadratic_form(make_displacement(std::span<const double>(v.data(), v.size())));
      },
      py::arg("v"), "Minkowski form v_t^2 - |v_spatial|^2 of a displacement");

  m.def(
      "classify",
      [](const std::vector<double>& x, const std::vector<double>& y, double tau_rel) {
        return std::string(
            to_string(classify(event_from(x), event_from(y), TolerancePolicy{tau_rel})));
      },
      py::arg("x"), py::arg("y"), py::arg("tau_rel") = 1e-9,
      "causal class of the ordered event pair (x, y)");

  m.def(
      "related",
      [](const std::string& kind, const std::vector<double>& x, const std::vector<double>& y,
         std::optional<std::vector<double>> axis, double tau_rel) {
        Relation r;
        if (kind == "Chrono") r = chrono();
        else if (kind == "CausalIrr") r = causal_irr();
        else if (kind == "HorismosIrr") r = horismos_irr();
        else if (kind == "SpacelikeLeq") {
          if (!axis) throw std::invalid_argument("SpacelikeLeq requires an axis");
          r = spacelike_leq(make_partition(std::span<const double>(axis->data(), axis->size())));
        } else {
          throw std::invalid_argument("unknown relation kind: " + kind);
        }
        return related(r, event_from(x), event_from(y), TolerancePolicy{tau_rel});
      },
      py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("axis") = std::nullopt,
      py::arg("tau_rel") = 1e-9);

  m.def(
      "member",
      [](const std::string& kind, const std::vector<double>& center,
         const std::vector<double>& q, std::optional<double> eps,
         std::optional<std::vector<double>> axis, double tau_rel) {
        return member(nbhd_from(kind, center, eps, std::move(axis)), event_from(q),
                      TolerancePolicy{tau_rel});
      },
      py::arg("kind"), py::arg("center"), py::arg("q"), py::arg("eps") = std::nullopt,
      py::arg("axis") = std::nullopt, py::arg("tau_rel") = 1e-9,
      "membership of q in the basic set of the given kind at the given center");

  m.def(
      "trace_on_line",
      [](const std::string& kind, const std::vector<double>& center, std::optional<double> eps,
         const std::vector<double>& point, const std::vector<double>& direction, double s_min,
         double s_max, int samples, double tau_rel) {
        const auto runs = trace_on_line(
            nbhd_from(kind, center, eps, std::nullopt), event_from(point),
            make_displacement(std::span<const double>(direction.data(), direction.size())),
            s_min, s_max, samples, TolerancePolicy{tau_rel});
        std::vector<std::pair<double, double>> out;
        for (const auto& r : runs) out.emplace_back(r.lo, r.hi);
        return out;
      },
      py::arg("kind"), py::arg("center"), py::arg("eps"), py::arg("point"),
      py::arg("direction"), py::arg("s_min") = -2.0, py::arg("s_max") = 2.0,
      py::arg("samples") = 10001, py::arg("tau_rel") = 1e-9);

  m.def(
      "converges_ray",
      [](const std::vector<double>& direction, const std::string& kind, double eps0, int steps,
         int n_max, double tau_rel) {
        const EventSequence seq = ray_sequence(
            make_displacement(std::span<const double>(direction.data(), direction.size())),
            n_max);
        const Verdict v = converges(seq, kind_from(kind), Schedule{eps0, steps},
                                    TolerancePolicy{tau_rel},
                                    default_partition(static_cast<int>(direction.size()) - 1));
        return verdict_to_dict(v);
      },
      py::arg("direction"), py::arg("kind"), py::arg("eps0") = 1.0, py::arg("steps") = 6,
      py::arg("n_max") = 256, py::arg("tau_rel") = 1e-9,
      "convergence verdict for x_n = direction / n against the kind's local schedule");

  m.def(
      "lct_check",
      [](const std::string& family, const std::string& kind, const std::string& defn,
         double theta0, double v0, double s_max, double eps0, int steps, int gamma_samples,
         int n_max, double tail_fraction, double tau_rel) {
        const CurveFamily fam = family_from(family, theta0, v0, s_max);
        const auto d = parse_limit_defn(defn);
        if (!d) throw std::invalid_argument("unknown limit-curve definition: " + defn);
        LctParams params;
        params.schedule = Schedule{eps0, steps};
        params.gamma_samples = gamma_samples;
        params.horizon = Horizon{n_max, tail_fraction};
        params.partition = default_partition(2);
        const Verdict v = limit_curve_check(fam, fam.limit_curve(), kind_from(kind), *d, params,
                                            TolerancePolicy{tau_rel});
        return verdict_to_dict(v);
      },
      py::arg("family"), py::arg("kind"), py::arg("defn") = "D1", py::arg("theta0") = 0.5,
      py::arg("v0") = 0.9, py::arg("s_max") = 2.0, py::arg("eps0") = 1.0, py::arg("steps") = 3,
      py::arg("gamma_samples") = 16, py::arg("n_max") = 256, py::arg("tail_fraction") = 0.9,
      py::arg("tau_rel") = 1e-9);

  m.def(
      "generate_from_subbase",
      [](int n, const std::vector<std::uint32_t>& masks) {
        return finite::generate_from_subbase(finite::make_family(n, masks)).sets;
      },
      py::arg("n"), py::arg("masks"));

  m.def(
      "intersection_topology",
      [](int n, const std::vector<std::uint32_t>& t1, const std::vector<std::uint32_t>& t2)
          -> std::optional<std::vector<std::uint32_t>> {
        const auto res = finite::intersection_topology(finite::make_family(n, t1),
                                                       finite::make_family(n, t2));
        if (!res.is_base) return std::nullopt;
        return res.topology.sets;
      },
      py::arg("n"), py::arg("t1"), py::arg("t2"),
      "generated intersection topology, or None when the family is not a base");

  m.def(
      "lemma1_trials",
      [](int n, int trials, std::uint64_t seed) {
        Rng rng(seed);
        int pass = 0;
        for (int t = 0; t < trials; ++t) {
          const int size = rng.uniform_int(2, n);
          const auto b1 = finite::random_base(rng, size);
          const auto b2 = finite::random_base(rng, size);
          if (finite::verify_lemma1(b1, b2).pass) ++pass;
        }
        py::dict d;
        d["pass"] = pass;
        d["total"] = trials;
        return d;
      },
      py::arg("n") = 6, py::arg("trials") = 100, py::arg("seed") = 42);
}
