#pragma once

#include <vector>

#include "liftforge/lift.hpp"
#include "liftforge/matroid.hpp"

namespace liftforge {

/// All hyperplanes (maximal proper flats, rank r-1) in canonical ascending
/// order.  Cross-checked against the complements of the dual's circuits; a
/// disagreement is fatal.
std::vector<SmallSet> hyperplanes(const Matroid& k);

/// A matroid N whose ground set indexes the hyperplanes of a base matroid.
struct HyperplaneSpace {
  Matroid base;
  std::vector<SmallSet> sets;
  Matroid n;

  int size() const { return static_cast<int>(sets.size()); }
  /// Indices of the hyperplanes containing x.
  SmallSet hyperplanes_over(const SmallSet& x) const;
};
HyperplaneSpace hyperplane_space(const Matroid& base, Matroid n);

/// A collection of hyperplanes is perfect when the rank of its intersection
/// is r(K) minus the collection size and no member contains the intersection
/// of the others.  Agrees with circuit perfection of the complements in the
/// dual.
bool is_perfect_hyperplanes(const HyperplaneSpace& hs, const SmallSet& members);

std::vector<SmallSet> enumerate_perfect_hyperplanes(const HyperplaneSpace& hs,
                                                    const PerfectEnumOptions& opts = {});

/// The dual closure condition: every hyperplane containing the intersection
/// of a perfect collection must lie in the N-closure of that collection.
StarReport satisfies_dual_star(const HyperplaneSpace& hs, const PerfectEnumOptions& opts = {});

/// The projected matroid: r(X) = r_K(X) - r(N) + r_N({H : X inside H}).
/// With `check` on, the dual closure condition is verified first.  The
/// result has rank r(K) - r(N) and is a quotient of K.
Matroid project(const HyperplaneSpace& hs, bool check = true,
                const PerfectEnumOptions& opts = {});

/// Rebuilds the projection through the dual route: transport N onto the
/// circuits of the dual via complements, lift the dual, dualize back, and
/// compare rank tables with the direct formula.  The two computations are
/// independent, so agreement is evidence for both.
Verdict duality_bridge(const HyperplaneSpace& hs);

/// A family of hyperplanes is a linear subclass when any two members whose
/// intersection has rank r-2 force every hyperplane over that intersection
/// into the family.
LinearClassReport is_linear_subclass(const Matroid& k, const std::vector<SmallSet>& hyps,
                                     const SmallSet& members);

/// Rank <= 1 matroid on the hyperplanes: `loops` are loops, the rest one
/// parallel class.
HyperplaneSpace loop_subclass_space(const Matroid& k, const SmallSet& loops);

/// Elementary projection from a linear subclass: rank drops on X exactly
/// when every hyperplane containing X is in the subclass.
Matroid crapo(const Matroid& k, const SmallSet& subclass);

}  // namespace liftforge
