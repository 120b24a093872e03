#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "conetop/geometry.hpp"
#include "conetop/transform.hpp"

namespace conetop {

/// Spatial unit axis splitting every space cone into two half-cones by the
/// sign of <spatial displacement, axis>.
struct Partition {
  std::array<double, 3> axis{1.0, 0.0, 0.0};
  int n = 3;
};

/// Normalizes the axis; throws on a zero or non-finite vector.
Partition make_partition(std::span<const double> axis);
Partition make_partition(std::initializer_list<double> axis);
Partition default_partition(int spatial_dim);
Partition rotate_axis(const GTransform& g, const Partition& p, const TolerancePolicy& tol = {});

/// +1 for the S+ half, -1 for the S- half. Ties |<.,axis>| <= band are
/// broken by the sign of the first nonzero spatial component.
int partition_side(const Displacement& d, const Partition& p, const TolerancePolicy& tol);

enum class RelationKind {
  Chrono,        // strict chronological order
  CausalIrr,     // irreflexive causal order (timelike or null future, not equal)
  HorismosIrr,   // irreflexive horismos (null future, not equal)
  SpacelikeLeq,  // spacelike non-causal order via the space-cone partition
};

const char* to_string(RelationKind k);

struct Relation {
  RelationKind kind = RelationKind::Chrono;
  std::optional<Partition> partition;  // required iff SpacelikeLeq
};

Relation chrono();
Relation causal_irr();
Relation horismos_irr();
Relation spacelike_leq(const Partition& p);
/// Validates the partition requirement; throws std::invalid_argument.
Relation make_relation(RelationKind kind, std::optional<Partition> partition);

/// related(r, x, y) <=> y lies in the strict upper set of x under r.
/// All four relations are irreflexive.
bool related(const Relation& r, const Event& x, const Event& y, const TolerancePolicy& tol);

enum class ConeKind {
  TimeConeBoth,     // chronological past or future, apex excluded
  SpaceCone,
  SpaceConePlus,
  SpaceConeMinus,
  LightConeBoth,
  CausalConeBoth,
  ClosedSpaceCone,  // space cone together with both light cones
};

const char* to_string(ConeKind k);

struct ConeRegion {
  ConeKind kind = ConeKind::TimeConeBoth;
  Event apex;
  std::optional<Partition> partition;  // required for the +/- kinds
};

ConeRegion cone_region(ConeKind kind, const Event& apex, std::optional<Partition> partition = {});
bool in_region(const ConeRegion& r, const Event& q, const TolerancePolicy& tol);

enum class SubbasicSide { Upper, Lower };

/// True iff q is NOT in the strict upper (resp. lower) set of z under r,
/// i.e. q belongs to the subbasic complement set anchored at z.
bool subbasic_complement_contains(const Relation& r, const Event& z, SubbasicSide side,
                                  const Event& q, const TolerancePolicy& tol);

/// The intersection of the two subbasic complements at x, in closed form:
/// the apex together with a cone region that depends only on the relation
/// kind. `dashed` re-includes the light cone.
struct IntervalNbhd {
  Relation relation;
  Event center;
  bool dashed = false;
};

IntervalNbhd minimal_interval_nbhd(const Relation& r, const Event& x, bool dashed = false);
bool member(const IntervalNbhd& nb, const Event& q, const TolerancePolicy& tol);

}  // namespace conetop
