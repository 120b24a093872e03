#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conetop/rng.hpp"

namespace conetop::finite {

/// Subsets of a ground set {0, ..., n-1}, n <= 12, encoded as bit masks.
/// Everything here is exact set algebra by exhaustive enumeration.
using Mask = std::uint32_t;

struct SetFamily {
  int n = 0;
  std::vector<Mask> sets;  // strictly increasing, duplicate free

  Mask universe() const { return (Mask{1} << n) - 1; }
  bool contains(Mask m) const;
  std::size_t size() const { return sets.size(); }
  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

inline constexpr int kMaxGroundSize = 12;

/// Sorts and dedups; throws on n outside [1, 12] or masks outside the universe.
SetFamily make_family(int n, std::vector<Mask> sets);
SetFamily discrete_topology(int n);
SetFamily indiscrete_topology(int n);

bool is_cover(const SetFamily& f);
bool closed_under_intersection(const SetFamily& f);
bool closed_under_union(const SetFamily& f);
bool is_topology(const SetFamily& f);

/// Base axioms: the family covers X and every point of an overlap B1 n B2
/// sits inside some member contained in the overlap.
struct BaseCheck {
  bool ok = false;
  Mask b1 = 0, b2 = 0;
  Mask witness_point = 0;  // point of the overlap with no refining member
};
BaseCheck check_base(const SetFamily& f);

/// Closure under finite intersections (X joins as the empty intersection)
/// followed by closure under arbitrary unions (the empty set joins as the
/// empty union).
SetFamily generate_from_subbase(const SetFamily& s);

/// Closure of a base under arbitrary unions, plus the empty set.
SetFamily generate_from_base(const SetFamily& b);

SetFamily pairwise_intersections(const SetFamily& a, const SetFamily& b);

/// "NotABase" is a value, not an error.
struct IntersectionResult {
  bool is_base = false;
  SetFamily topology;  // meaningful iff is_base
  BaseCheck base_check;
};
IntersectionResult intersection_topology(const SetFamily& t1, const SetFamily& t2);

struct Lemma1Report {
  bool intersection_family_is_base = false;
  bool generated_equals_intersection_topology = false;
  bool pass = false;
  Mask counterexample = 0;
  std::string detail;
};

/// Checks that pairwise intersections of two bases generate exactly the
/// intersection topology of the two generated topologies.
Lemma1Report verify_lemma1(const SetFamily& b1, const SetFamily& b2);

/// Intersection-closure of a few random subsets plus X: always a base.
SetFamily random_base(Rng& rng, int n, int max_generators = 5);

}  // namespace conetop::finite
