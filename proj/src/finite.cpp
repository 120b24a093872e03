#include "conetop/finite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace conetop::finite {

bool SetFamily::contains(Mask m) const {
  return std::binary_search(sets.begin(), sets.end(), m);
}

SetFamily make_family(int n, std::vector<Mask> sets) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in [1, 12]");
  }
  SetFamily f;
  f.n = n;
  const Mask uni = (Mask{1} << n) - 1;
  for (Mask m : sets) {
    if (m & ~uni) throw std::invalid_argument("mask outside the ground set");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  f.sets = std::move(sets);
  return f;
}

SetFamily discrete_topology(int n) {
  std::vector<Mask> all;
  const Mask uni = (Mask{1} << n) - 1;
  for (Mask m = 0; m <= uni; ++m) all.push_back(m);
  return make_family(n, std::move(all));
}

SetFamily indiscrete_topology(int n) {
  return make_family(n, {Mask{0}, (Mask{1} << n) - 1});
}

bool is_cover(const SetFamily& f) {
  Mask u = 0;
  for (Mask m : f.sets) u |= m;
  return u == f.universe();
}

bool closed_under_intersection(const SetFamily& f) {
  for (Mask a : f.sets)
    for (Mask b : f.sets)
      if (!f.contains(a & b)) return false;
  return true;
}

bool closed_under_union(const SetFamily& f) {
  for (Mask a : f.sets)
    for (Mask b : f.sets)
      if (!f.contains(a | b)) return false;
  return true;
}

bool is_topology(const SetFamily& f) {
  return f.contains(0) && f.contains(f.universe()) && is_cover(f) &&
         closed_under_intersection(f) && closed_under_union(f);
}

BaseCheck check_base(const SetFamily& f) {
  BaseCheck out;
  if (!is_cover(f)) {
    out.ok = false;
    return out;
  }
  for (Mask a : f.sets) {
    for (Mask b : f.sets) {
      const Mask overlap = a & b;
      Mask uncovered = overlap;
      for (Mask c : f.sets) {
        if ((c & ~overlap) == 0) uncovered &= ~c;
        if (uncovered == 0) break;
      }
      if (uncovered != 0) {
        out.ok = false;
        out.b1 = a;
        out.b2 = b;
        out.witness_point = uncovered & (~uncovered + 1);  // lowest set bit
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

namespace {

std::set<Mask> close_pairwise(std::set<Mask> work, bool unions) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> snapshot(work.begin(), work.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        const Mask m = unions ? (snapshot[i] | snapshot[j]) : (snapshot[i] & snapshot[j]);
        if (work.insert(m).second) changed = true;
      }
    }
  }
  return work;
}

}  // namespace

SetFamily generate_from_subbase(const SetFamily& s) {
  if (s.sets.empty()) throw std::invalid_argument("subbase must be nonempty");
  std::set<Mask> work(s.sets.begin(), s.sets.end());
  work.insert(s.universe());  // empty intersection
  work = close_pairwise(std::move(work), /*unions=*/false);
  work.insert(0);  // empty union
  work = close_pairwise(std::move(work), /*unions=*/true);
  return make_family(s.n, std::vector<Mask>(work.begin(), work.end()));
}

SetFamily generate_from_base(const SetFamily& b) {
  if (b.sets.empty()) throw std::invalid_argument("base must be nonempty");
  std::set<Mask> work(b.sets.begin(), b.sets.end());
  work.insert(0);
  work = close_pairwise(std::move(work), /*unions=*/true);
  return make_family(b.n, std::vector<Mask>(work.begin(), work.end()));
}

SetFamily pairwise_intersections(const SetFamily& a, const SetFamily& b) {
  if (a.n != b.n) throw std::invalid_argument("families live on different ground sets");
  std::set<Mask> out;
  for (Mask x : a.sets)
    for (Mask y : b.sets) out.insert(x & y);
  return make_family(a.n, std::vector<Mask>(out.begin(), out.end()));
}

IntersectionResult intersection_topology(const SetFamily& t1, const SetFamily& t2) {
  IntersectionResult res;
  const SetFamily candidate = pairwise_intersections(t1, t2);
  res.base_check = check_base(candidate);
  res.is_base = res.base_check.ok;
  if (res.is_base) res.topology = generate_from_base(candidate);
  return res;
}

Lemma1Report verify_lemma1(const SetFamily& b1, const SetFamily& b2) {
  Lemma1Report rep;
  if (!check_base(b1).ok || !check_base(b2).ok) {
    throw std::invalid_argument("inputs must satisfy the base axioms");
  }
  const SetFamily t1 = generate_from_base(b1);
  const SetFamily t2 = generate_from_base(b2);
  const IntersectionResult tint = intersection_topology(t1, t2);

  const SetFamily bint = pairwise_intersections(b1, b2);
  const BaseCheck bint_check = check_base(bint);
  rep.intersection_family_is_base = bint_check.ok;

  if (!tint.is_base) {
    rep.detail = "intersection topology of the generated topologies does not exist";
    rep.pass = false;
    return rep;
  }
  if (!bint_check.ok) {
    rep.detail = "pairwise base intersections fail the base axioms";
    rep.counterexample = bint_check.witness_point;
    rep.pass = false;
    return rep;
  }

  const SetFamily generated = generate_from_base(bint);
  rep.generated_equals_intersection_topology = generated == tint.topology;
  if (!rep.generated_equals_intersection_topology) {
    for (Mask m : generated.sets) {
      if (!tint.topology.contains(m)) {
        rep.counterexample = m;
        break;
      }
    }
    for (Mask m : tint.topology.sets) {
      if (!generated.contains(m)) {
        rep.counterexample = m;
        break;
      }
    }
    rep.detail = "generated topology differs from the intersection topology";
  }
  rep.pass = rep.intersection_family_is_base && rep.generated_equals_intersection_topology;
  return rep;
}

SetFamily random_base(Rng& rng, int n, int max_generators) {
  const Mask uni = (Mask{1} << n) - 1;
  std::set<Mask> gens;
  const int count = rng.uniform_int(1, max_generators);
  for (int i = 0; i < count; ++i) {
    gens.insert(static_cast<Mask>(rng.next() & uni));
  }
  gens.insert(uni);
  // Intersection-closed families covering X always satisfy the base axioms.
  auto closed = close_pairwise(std::move(gens), /*unions=*/false);
  return make_family(n, std::vector<Mask>(closed.begin(), closed.end()));
}

}  // namespace conetop::finite
