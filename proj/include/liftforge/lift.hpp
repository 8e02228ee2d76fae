#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liftforge/matroid.hpp"

namespace liftforge {

/// A matroid N whose ground set indexes the circuits of a base matroid.
struct CircuitSpace {
  CircuitFamily family;
  Matroid n;
};

/// Validates that |ground of n| equals the number of circuits of the base.
CircuitSpace circuit_space(const Matroid& base, Matroid n);
CircuitSpace circuit_space(CircuitFamily family, Matroid n);

/// Indices of the fundamental circuits of the base with respect to `basis`:
/// for each e outside the basis, the unique circuit inside basis + e.  The
/// result is always a perfect collection of corank-many circuits.
SmallSet fundamental_circuits(const CircuitFamily& family, const SmallSet& basis);

/// A collection of circuits is perfect when the nullity of its union equals
/// the collection size and no member lies inside the union of the others.
bool is_perfect(const CircuitFamily& family, const SmallSet& members);

struct PerfectEnumOptions {
  int max_circuits = 24;                     // reject wider circuit families
  std::int64_t max_collections = 4000000;    // output-size guard
};

/// Every perfect collection, each exactly once, in canonical ascending order.
/// Subsets of perfect collections are perfect, so the family is enumerated by
/// a pruned depth-first search; the options bound the circuit-family width
/// and the output size, not the 2^circuits search space.
std::vector<SmallSet> enumerate_perfect(const CircuitFamily& family,
                                        const PerfectEnumOptions& opts = {});

struct StarReport {
  bool pass = true;
  SmallSet collection;  // witness perfect collection (circuit indices)
  int circuit = -1;     // witness circuit index
  std::string witness;
  explicit operator bool() const { return pass; }
};

/// The closure condition of the lift construction: every circuit of the base
/// inside the union of a perfect collection must lie in the N-closure of
/// that collection.  Checks every perfect collection; the reported witness
/// is the canonically least violation regardless of worker count.
StarReport satisfies_star(const CircuitSpace& ns, const PerfectEnumOptions& opts = {});

/// The lifted matroid: r(X) = r_M(X) + r_N({circuits of M|X}).  With `check`
/// on (the default), the closure condition is verified first and a violation
/// throws ConstructionError carrying the witness.  The result has rank
/// r(M) + r(N).
Matroid lift(const Matroid& m, const CircuitSpace& ns, bool check = true,
             const PerfectEnumOptions& opts = {});

struct LinearClassReport {
  bool pass = true;
  int c1 = -1, c2 = -1, c = -1;  // witness triple of circuit indices
  std::string witness;
  explicit operator bool() const { return pass; }
};

/// A family of circuits is a linear class when any two members whose union
/// has nullity two force every circuit inside that union into the family.
LinearClassReport is_linear_class(const CircuitFamily& family, const SmallSet& members);

/// Rank <= 1 matroid on the circuit family: `loops` are the loops, all other
/// circuits form one parallel class.
CircuitSpace loop_class_space(CircuitFamily family, const SmallSet& loops);

/// Elementary lift from a linear class: r(X) = r_M(X), plus one unless every
/// circuit of M|X is in the class.  Validates the class and throws
/// ConstructionError with the witness triple otherwise.
Matroid brylawski(const Matroid& m, const SmallSet& class_members);

/// A rank-3 matroid on the circuits of any base of corank >= 3: a set of at
/// most three circuits is independent when each of its subsets is no larger
/// than the nullity of the subset's union.  Satisfies the closure condition.
CircuitSpace rank3_circuit_space(const Matroid& m);

/// True when some k circuits of base|X form an N-independent collection.
/// Used as an independent route to the lift's rank formula.
bool has_independent_circuit_collection(const CircuitSpace& ns, const SmallSet& x, int k);

}  // namespace liftforge
