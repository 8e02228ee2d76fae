#pragma once

#include "liftforge/lift.hpp"
#include "liftforge/matroid.hpp"

namespace liftforge {

/// A validated finite-field representation: the column matroid of `matrix`
/// is the represented matroid.
struct Representation {
  FieldMatrix matrix;
  Matroid matroid;  // the column matroid
};

/// Wraps a matrix as a representation of its own column matroid.
Representation make_representation(FieldMatrix a);
/// Validates that the column matroid of `a` has the same rank table as
/// `declared`; throws ValidationError with a witness subset otherwise.
Representation make_representation(FieldMatrix a, const Matroid& declared);

/// The derived matroid of the representation: one column per circuit of the
/// base, namely the kernel vector supported exactly on that circuit (unique
/// up to scale; scaled so its lowest-index entry is 1).  Its rank equals the
/// corank of the base, it is loopless, and it satisfies the lift
/// construction's closure condition.
CircuitSpace derived_circuit_space(const Representation& rep);

/// Access to the per-circuit kernel vectors (columns of the derived matrix).
FieldMatrix derived_matrix(const Representation& rep);

/// Lifts the base by its derived matroid.  The result is always the free
/// matroid on the base's ground set; violations of the closure condition or
/// of freeness indicate an internal error and throw.
Matroid derived_free_lift(const Representation& rep);

/// The rank-k truncation of the derived matroid, 1 <= k <= corank; still
/// satisfies the closure condition (projections preserve it).
CircuitSpace truncated_derived_space(const Representation& rep, int k);

}  // namespace liftforge
