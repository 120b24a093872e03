#include "conetop/relations.hpp"

#include <cmath>
#include <stdexcept>

namespace conetop {

Partition make_partition(std::span<const double> axis) {
  const int n = static_cast<int>(axis.size());
  if (n < 1 || n > 3) {
    throw std::invalid_argument("partition axis must have 1 to 3 components");
  }
  double norm2 = 0.0;
  for (double x : axis) {
    if (!std::isfinite(x)) throw std::invalid_argument("partition axis must be finite");
    norm2 += x * x;
  }
  if (norm2 == 0.0) throw std::invalid_argument("partition axis must be nonzero");
  const double inv = 1.0 / std::sqrt(norm2);
  Partition p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.axis[static_cast<std::size_t>(i)] = axis[static_cast<std::size_t>(i)] * inv;
  for (int i = n; i < 3; ++i) p.axis[static_cast<std::size_t>(i)] = 0.0;
  return p;
}

Partition make_partition(std::initializer_list<double> axis) {
  return make_partition(std::span<const double>(axis.begin(), axis.size()));
}

Partition default_partition(int spatial_dim) {
  Partition p;
  p.n = spatial_dim;
  p.axis = {1.0, 0.0, 0.0};
  return p;
}

Partition rotate_axis(const GTransform& g, const Partition& p, const TolerancePolicy& tol) {
  if (!is_spatial_rotation(g.lorentz, tol.tau_rel)) {
    throw std::invalid_argument("axis transport requires a pure spatial rotation");
  }
  if (g.n != p.n) throw std::invalid_argument("dimension mismatch");
  Vec4 v{0.0, p.axis[0], p.axis[1], p.axis[2]};
  const Vec4 r = matvec(g.lorentz, v);
  std::array<double, 3> out{r[1], r[2], r[3]};
  return make_partition(std::span<const double>(out.data(), static_cast<std::size_t>(p.n)));
}

int partition_side(const Displacement& d, const Partition& p, const TolerancePolicy& tol) {
  if (d.n != p.n) throw std::invalid_argument("dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < p.n; ++i) {
    s += d.v[static_cast<std::size_t>(i + 1)] * p.axis[static_cast<std::size_t>(i)];
  }
  if (std::abs(s) > tol.band(d)) return s > 0.0 ? +1 : -1;
  for (int i = 1; i <= d.n; ++i) {
    const double x = d.v[static_cast<std::size_t>(i)];
    if (x != 0.0) return x > 0.0 ? +1 : -1;
  }
  return 0;  // zero spatial part; unreachable for spacelike displacements
}

const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Chrono: return "Chrono";
    case RelationKind::CausalIrr: return "CausalIrr";
    case RelationKind::HorismosIrr: return "HorismosIrr";
    case RelationKind::SpacelikeLeq: return "SpacelikeLeq";
  }
  return "Unknown";
}

Relation chrono() { return Relation{RelationKind::Chrono, std::nullopt}; }
Relation causal_irr() { return Relation{RelationKind::CausalIrr, std::nullopt}; }
Relation horismos_irr() { return Relation{RelationKind::HorismosIrr, std::nullopt}; }
Relation spacelike_leq(const Partition& p) {
  return Relation{RelationKind::SpacelikeLeq, p};
}

Relation make_relation(RelationKind kind, std::optional<Partition> partition) {
  if (kind == RelationKind::SpacelikeLeq) {
    if (!partition) throw std::invalid_argument("SpacelikeLeq requires a partition");
  } else if (partition) {
    throw std::invalid_argument("only SpacelikeLeq carries a partition");
  }
  return Relation{kind, std::move(partition)};
}

bool related(const Relation& r, const Event& x, const Event& y, const TolerancePolicy& tol) {
  const Displacement d = y - x;
  const CausalClass c = classify(d, tol);
  switch (r.kind) {
    case RelationKind::Chrono:
      return c == CausalClass::ChronoFuture;
    case RelationKind::CausalIrr:
      return c == CausalClass::ChronoFuture || c == CausalClass::HorismosFuture;
    case RelationKind::HorismosIrr:
      return c == CausalClass::HorismosFuture;
    case RelationKind::SpacelikeLeq: {
      if (!r.partition) throw std::invalid_argument("SpacelikeLeq requires a partition");
      if (c == CausalClass::HorismosFuture) return true;
      return c == CausalClass::Spacelike && partition_side(d, *r.partition, tol) > 0;
    }
  }
  return false;
}

const char* to_string(ConeKind k) {
  switch (k) {
    case ConeKind::TimeConeBoth: return "TimeConeBoth";
    case ConeKind::SpaceCone: return "SpaceCone";
    case ConeKind::SpaceConePlus: return "SpaceConePlus";
    case ConeKind::SpaceConeMinus: return "SpaceConeMinus";
    case ConeKind::LightConeBoth: return "LightConeBoth";
    case ConeKind::CausalConeBoth: return "CausalConeBoth";
    case ConeKind::ClosedSpaceCone: return "ClosedSpaceCone";
  }
  return "Unknown";
}

ConeRegion cone_region(ConeKind kind, const Event& apex, std::optional<Partition> partition) {
  const bool needs_partition =
      kind == ConeKind::SpaceConePlus || kind == ConeKind::SpaceConeMinus;
  if (needs_partition && !partition) {
    throw std::invalid_argument("half space-cone requires a partition");
  }
  return ConeRegion{kind, apex, std::move(partition)};
}

bool in_region(const ConeRegion& r, const Event& q, const TolerancePolicy& tol) {
  const Displacement d = q - r.apex;
  const CausalClass c = classify(d, tol);
  switch (r.kind) {
    case ConeKind::TimeConeBoth:
      return is_chrono(c);
    case ConeKind::SpaceCone:
      return c == CausalClass::Spacelike;
    case ConeKind::SpaceConePlus:
    case ConeKind::SpaceConeMinus: {
      if (!r.partition) throw std::invalid_argument("half space-cone requires a partition");
      if (c != CausalClass::Spacelike) return false;
      const int side = partition_side(d, *r.partition, tol);
      return r.kind == ConeKind::SpaceConePlus ? side > 0 : side < 0;
    }
    case ConeKind::LightConeBoth:
      return is_horismos(c);
    case ConeKind::CausalConeBoth:
      return is_causal(c);
    case ConeKind::ClosedSpaceCone:
      return c == CausalClass::Spacelike || is_horismos(c);
  }
  return false;
}

bool subbasic_complement_contains(const Relation& r, const Event& z, SubbasicSide side,
                                  const Event& q, const TolerancePolicy& tol) {
  return side == SubbasicSide::Upper ? !related(r, z, q, tol) : !related(r, q, z, tol);
}

IntervalNbhd minimal_interval_nbhd(const Relation& r, const Event& x, bool dashed) {
  if (dashed && r.kind == RelationKind::HorismosIrr) {
    throw std::invalid_argument("the dashed horismos interval set is the whole space");
  }
  if (r.kind == RelationKind::Chrono) {
    throw std::invalid_argument("no interval topology is built from the reflexive-free chrono order here");
  }
  return IntervalNbhd{r, x, dashed};
}

bool member(const IntervalNbhd& nb, const Event& q, const TolerancePolicy& tol) {
  if (q == nb.center) return true;
  const CausalClass c = classify(nb.center, q, tol);
  switch (nb.relation.kind) {
    case RelationKind::SpacelikeLeq:
      // complement of S+ u S- u (punctured light cone); the time cone remains
      return is_chrono(c) || (nb.dashed && is_horismos(c));
    case RelationKind::CausalIrr:
      return c == CausalClass::Spacelike || (nb.dashed && is_horismos(c));
    case RelationKind::HorismosIrr:
      return !is_horismos(c);
    case RelationKind::Chrono:
      return c == CausalClass::Spacelike || is_horismos(c);
  }
  return false;
}

}  // namespace conetop
