#pragma once

#include <string>
#include <vector>

#include "liftforge/lift.hpp"
#include "liftforge/matroid.hpp"

namespace liftforge {

/// All matroids of rank r on the labeled ground {0..m-1}, m <= 6, via
/// exhaustive basis-family enumeration with exchange filtering, in canonical
/// order.  Labeled enumeration: no isomorphism collapsing.
std::vector<Matroid> enumerate_matroids(int m, int r);

/// All matroids on {0..m-1}, every rank.  Counts for m = 0..6 are
/// 1, 2, 5, 16, 68, 406, 3807 (the labeled matroid numbers), asserted in the
/// test suite as a sanity check.
std::vector<Matroid> matroid_catalog(int m);

/// All catalog matroids that are simultaneously a quotient of k and a lift
/// of m.  Requires m to be a quotient of k.
std::vector<Matroid> intermediate_matroids(const Matroid& k, const Matroid& m);

/// Outcome of one brute-force conjecture instance.  Reports are
/// deterministic: fixed catalog order, canonical witnesses.
struct LabReport {
  std::string instance;
  bool family_is_matroid = false;   // candidate independence family check
  bool star_pass = false;           // closure condition of the built space
  bool lift_isomorphic = false;     // lifted matroid matches the target
  bool success = false;
  bool counterexample_candidate = false;  // a re-checked axiom failure
  int witness_count = 0;            // searches: number of spaces found
  std::vector<Matroid> witnesses;   // searches: the spaces themselves
  std::vector<std::string> notes;

  std::string text() const;
};

/// Builds the candidate independence family on the circuits of m predicted
/// for the lift k: a circuit collection is independent when no intermediate
/// matroid k' (quotient of k, lift of m) has every member as a circuit while
/// r(k) - r(k') stays below the collection size.  Tests whether the family
/// is a matroid, then whether its lift of m is isomorphic to k.
LabReport conjecture73_family(const Matroid& m, const Matroid& k, int max_ground = 5);

/// Exhaustive search over every catalog matroid on the circuits of m for a
/// space that satisfies the closure condition and lifts m to (an isomorph
/// of) k.  Requires at most 6 circuits.
LabReport conjecture72_search(const Matroid& m, const Matroid& k);

/// The hyperplane-side instance for a projection m of k, run through
/// duality: the circuits of dual(k) complement the hyperplanes of k, so this
/// is conjecture73_family(dual(k), dual(m)) with a translated report.
LabReport dual_projection_family(const Matroid& k, const Matroid& m, int max_ground = 5);

}  // namespace liftforge
