#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conetop/geometry.hpp"
#include "conetop/relations.hpp"

namespace conetop {

/// The twelve implemented neighborhood recipes. The Dash variants re-include
/// the light cone of the center.
enum class TopologyKind {
  Manifold,
  Alexandrov,
  Z,
  ZT,
  ZS,
  IntHorismos,
  IntSpacelike,
  IntCausal,
  ZTDash,
  ZSDash,
  IntSpacelikeDash,
  IntCausalDash,
};

inline constexpr int kTopologyKindCount = 12;
const std::vector<TopologyKind>& all_topology_kinds();

const char* to_string(TopologyKind k);
std::optional<TopologyKind> parse_topology_kind(std::string_view name);

/// Kinds whose basic sets carry a ball radius.
bool is_bounded(TopologyKind k);
/// Interval-topology kinds (a single unbounded minimal set per center).
bool is_interval_kind(TopologyKind k);
bool is_dashed(TopologyKind k);
std::optional<TopologyKind> dashed_of(TopologyKind k);
std::optional<TopologyKind> undashed_of(TopologyKind k);

/// A concrete basic open set: a pure membership predicate.
struct BasicNbhd {
  TopologyKind kind = TopologyKind::Manifold;
  Event center;
  std::optional<double> radius;        // required for bounded kinds
  std::optional<Partition> partition;  // carried by the spacelike interval kinds
  std::optional<Event> tip_past, tip_future;  // Alexandrov diamonds
};

/// Validates the radius/partition requirements; throws std::invalid_argument.
BasicNbhd make_basic_nbhd(TopologyKind kind, const Event& center,
                          std::optional<double> radius = {},
                          std::optional<Partition> partition = {});

/// Chronological diamond I+(a) n I-(b); requires a << b.
BasicNbhd alexandrov_nbhd(const Event& a, const Event& b, const TolerancePolicy& tol = {});

bool member(const BasicNbhd& b, const Event& q, const TolerancePolicy& tol);

bool intersection_member(const BasicNbhd& b1, const BasicNbhd& b2, const Event& q,
                         const TolerancePolicy& tol);

/// View of a minimal interval set as a basic open set of the matching kind.
BasicNbhd to_basic_nbhd(const IntervalNbhd& nb);

/// Geometric shrinking radii eps_k = eps0 * 2^-k, k = 0..steps-1.
struct Schedule {
  double eps0 = 1.0;
  int steps = 6;
};

/// Nested decreasing local family at x. Interval kinds return the single
/// minimal set; Alexandrov returns diamonds with tips x -+ (eps_k, 0, ...).
std::vector<BasicNbhd> local_schedule(TopologyKind kind, const Event& x, const Schedule& s,
                                      std::optional<Partition> partition = {});

std::string describe(const BasicNbhd& b);

struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Parameter set {s in [s_min, s_max] : member(b, point + s * direction)}
/// reported as maximal runs at the sample resolution.
std::vector<ParamInterval> trace_on_line(const BasicNbhd& b, const Event& point,
                                         const Displacement& direction, double s_min,
                                         double s_max, int samples,
                                         const TolerancePolicy& tol);

}  // namespace conetop
