#include "conetop/topology.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "conetop/format.hpp"

namespace conetop {

const std::vector<TopologyKind>& all_topology_kinds() {
  static const std::vector<TopologyKind> kinds = {
      TopologyKind::Manifold,     TopologyKind::Alexandrov,
      TopologyKind::Z,            TopologyKind::ZT,
      TopologyKind::ZS,           TopologyKind::IntHorismos,
      TopologyKind::IntSpacelike, TopologyKind::IntCausal,
      TopologyKind::ZTDash,       TopologyKind::ZSDash,
      TopologyKind::IntSpacelikeDash, TopologyKind::IntCausalDash,
  };
  return kinds;
}

const char* to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::Manifold: return "Manifold";
    case TopologyKind::Alexandrov: return "Alexandrov";
    case TopologyKind::Z: return "Z";
    case TopologyKind::ZT: return "ZT";
    case TopologyKind::ZS: return "ZS";
    case TopologyKind::IntHorismos: return "IntHorismos";
    case TopologyKind::IntSpacelike: return "IntSpacelike";
    case TopologyKind::IntCausal: return "IntCausal";
    case TopologyKind::ZTDash: return "ZTDash";
    case TopologyKind::ZSDash: return "ZSDash";
    case TopologyKind::IntSpacelikeDash: return "IntSpacelikeDash";
    case TopologyKind::IntCausalDash: return "IntCausalDash";
  }
  return "Unknown";
}

std::optional<TopologyKind> parse_topology_kind(std::string_view name) {
  auto eq = [&](std::string_view a) {
    if (a.size() != name.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(a[i])) !=
          std::tolower(static_cast<unsigned char>(name[i]))) {
        return false;
      }
    }
    return true;
  };
  for (TopologyKind k : all_topology_kinds()) {
    if (eq(to_string(k))) return k;
  }
  return std::nullopt;
}

bool is_bounded(TopologyKind k) {
  switch (k) {
    case TopologyKind::Manifold:
    case TopologyKind::Z:
    case TopologyKind::ZT:
    case TopologyKind::ZS:
    case TopologyKind::ZTDash:
    case TopologyKind::ZSDash:
      return true;
    default:
      return false;
  }
}

bool is_interval_kind(TopologyKind k) {
  switch (k) {
    case TopologyKind::IntHorismos:
    case TopologyKind::IntSpacelike:
    case TopologyKind::IntCausal:
    case TopologyKind::IntSpacelikeDash:
    case TopologyKind::IntCausalDash:
      return true;
    default:
      return false;
  }
}

bool is_dashed(TopologyKind k) {
  switch (k) {
    case TopologyKind::ZTDash:
    case TopologyKind::ZSDash:
    case TopologyKind::IntSpacelikeDash:
    case TopologyKind::IntCausalDash:
      return true;
    default:
      return false;
  }
}

std::optional<TopologyKind> dashed_of(TopologyKind k) {
  switch (k) {
    case TopologyKind::ZT: return TopologyKind::ZTDash;
    case TopologyKind::ZS: return TopologyKind::ZSDash;
    case TopologyKind::IntSpacelike: return TopologyKind::IntSpacelikeDash;
    case TopologyKind::IntCausal: return TopologyKind::IntCausalDash;
    default: return std::nullopt;
  }
}

std::optional<TopologyKind> undashed_of(TopologyKind k) {
  switch (k) {
    case TopologyKind::ZTDash: return TopologyKind::ZT;
    case TopologyKind::ZSDash: return TopologyKind::ZS;
    case TopologyKind::IntSpacelikeDash: return TopologyKind::IntSpacelike;
    case TopologyKind::IntCausalDash: return TopologyKind::IntCausal;
    default: return std::nullopt;
  }
}

BasicNbhd make_basic_nbhd(TopologyKind kind, const Event& center,
                          std::optional<double> radius,
                          std::optional<Partition> partition) {
  if (kind == TopologyKind::Alexandrov) {
    throw std::invalid_argument("use alexandrov_nbhd(a, b) for diamonds");
  }
  if (is_bounded(kind)) {
    if (!radius || !(*radius > 0.0)) {
      throw std::invalid_argument("bounded kind requires a positive radius");
    }
  } else if (radius) {
    throw std::invalid_argument("interval kinds do not take a radius");
  }
  BasicNbhd b;
  b.kind = kind;
  b.center = center;
  b.radius = radius;
  b.partition = std::move(partition);
  return b;
}

BasicNbhd alexandrov_nbhd(const Event& a, const Event& b, const TolerancePolicy& tol) {
  if (classify(a, b, tol) != CausalClass::ChronoFuture) {
    throw std::invalid_argument("diamond tips must satisfy a << b");
  }
  BasicNbhd nb;
  nb.kind = TopologyKind::Alexandrov;
  nb.tip_past = a;
  nb.tip_future = b;
  Event mid = a;
  for (std::size_t i = 0; i < 4; ++i) mid.c[i] = 0.5 * (a.c[i] + b.c[i]);
  nb.center = mid;
  return nb;
}

namespace {

bool within_ball(const BasicNbhd& b, const Event& q) {
  if (!b.radius) throw std::invalid_argument("missing radius on bounded kind");
  return euclidean_distance(b.center, q) < *b.radius;
}

RelationKind interval_relation(TopologyKind k) {
  switch (k) {
    case TopologyKind::IntHorismos: return RelationKind::HorismosIrr;
    case TopologyKind::IntSpacelike:
    case TopologyKind::IntSpacelikeDash: return RelationKind::SpacelikeLeq;
    case TopologyKind::IntCausal:
    case TopologyKind::IntCausalDash: return RelationKind::CausalIrr;
    default: throw std::invalid_argument("not an interval kind");
  }
}

}  // namespace

bool member(const BasicNbhd& b, const Event& q, const TolerancePolicy& tol) {
  switch (b.kind) {
    case TopologyKind::Manifold:
      return within_ball(b, q);
    case TopologyKind::Alexandrov: {
      if (!b.tip_past || !b.tip_future) {
        throw std::invalid_argument("diamond without tips");
      }
      return classify(*b.tip_past, q, tol) == CausalClass::ChronoFuture &&
             classify(q, *b.tip_future, tol) == CausalClass::ChronoFuture;
    }
    case TopologyKind::Z: {
      if (!within_ball(b, q)) return false;
      if (q == b.center) return true;
      return !is_horismos(classify(b.center, q, tol));
    }
    case TopologyKind::ZT: {
      if (q == b.center) return true;
      return is_chrono(classify(b.center, q, tol)) && within_ball(b, q);
    }
    case TopologyKind::ZS: {
      if (q == b.center) return true;
      return classify(b.center, q, tol) == CausalClass::Spacelike && within_ball(b, q);
    }
    case TopologyKind::ZTDash: {
      if (q == b.center) return true;
      return is_causal(classify(b.center, q, tol)) && within_ball(b, q);
    }
    case TopologyKind::ZSDash: {
      if (q == b.center) return true;
      const CausalClass c = classify(b.center, q, tol);
      return (c == CausalClass::Spacelike || is_horismos(c)) && within_ball(b, q);
    }
    case TopologyKind::IntHorismos:
    case TopologyKind::IntSpacelike:
    case TopologyKind::IntCausal:
    case TopologyKind::IntSpacelikeDash:
    case TopologyKind::IntCausalDash: {
      IntervalNbhd nb;
      nb.relation.kind = interval_relation(b.kind);
      nb.relation.partition =
          nb.relation.kind == RelationKind::SpacelikeLeq
              ? std::optional<Partition>(b.partition ? *b.partition : default_partition(b.center.n))
              : std::nullopt;
      nb.center = b.center;
      nb.dashed = is_dashed(b.kind);
      return member(nb, q, tol);
    }
  }
  return false;
}

bool intersection_member(const BasicNbhd& b1, const BasicNbhd& b2, const Event& q,
                         const TolerancePolicy& tol) {
  return member(b1, q, tol) && member(b2, q, tol);
}

BasicNbhd to_basic_nbhd(const IntervalNbhd& nb) {
  TopologyKind kind;
  switch (nb.relation.kind) {
    case RelationKind::HorismosIrr:
      kind = TopologyKind::IntHorismos;
      break;
    case RelationKind::SpacelikeLeq:
      kind = nb.dashed ? TopologyKind::IntSpacelikeDash : TopologyKind::IntSpacelike;
      break;
    case RelationKind::CausalIrr:
      kind = nb.dashed ? TopologyKind::IntCausalDash : TopologyKind::IntCausal;
      break;
    default:
      throw std::invalid_argument("no topology kind for this relation");
  }
  return make_basic_nbhd(kind, nb.center, std::nullopt, nb.relation.partition);
}

std::vector<BasicNbhd> local_schedule(TopologyKind kind, const Event& x, const Schedule& s,
                                      std::optional<Partition> partition) {
  if (!(s.eps0 > 0.0)) throw std::invalid_argument("eps0 must be positive");
  if (s.steps < 1) throw std::invalid_argument("schedule needs at least one step");
  std::vector<BasicNbhd> out;
  if (is_interval_kind(kind)) {
    out.push_back(make_basic_nbhd(kind, x, std::nullopt, partition));
    return out;
  }
  double eps = s.eps0;
  for (int k = 0; k < s.steps; ++k, eps *= 0.5) {
    if (kind == TopologyKind::Alexandrov) {
      Displacement up = make_displacement({eps, 0.0});
      up.n = x.n;  // purely temporal tip offset in any dimension
      out.push_back(alexandrov_nbhd(translate(x, scaled(up, -1.0)), translate(x, up)));
    } else {
      out.push_back(make_basic_nbhd(kind, x, eps, partition));
    }
  }
  return out;
}

std::string describe(const BasicNbhd& b) {
  std::string out = to_string(b.kind);
  if (b.kind == TopologyKind::Alexandrov) {
    out += " a=" + format_event(*b.tip_past) + " b=" + format_event(*b.tip_future);
    return out;
  }
  out += " at " + format_event(b.center);
  if (b.radius) out += " eps=" + fmt_double(*b.radius);
  return out;
}

std::vector<ParamInterval> trace_on_line(const BasicNbhd& b, const Event& point,
                                         const Displacement& direction, double s_min,
                                         double s_max, int samples,
                                         const TolerancePolicy& tol) {
  if (direction.norm2() == 0.0) throw std::invalid_argument("degenerate direction");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  if (!(s_max > s_min)) throw std::invalid_argument("empty parameter range");

  std::vector<ParamInterval> runs;
  bool in_run = false;
  double run_lo = 0.0, run_hi = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = s_min + (static_cast<double>(i) * (s_max - s_min)) /
                                 static_cast<double>(samples - 1);
    const Event q = translate(point, scaled(direction, s));
    if (member(b, q, tol)) {
      if (!in_run) {
        in_run = true;
        run_lo = s;
      }
      run_hi = s;
    } else if (in_run) {
      runs.push_back({run_lo, run_hi});
      in_run = false;
    }
  }
  if (in_run) runs.push_back({run_lo, run_hi});
  return runs;
}

}  // namespace conetop
