#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftforge/bitset.hpp"
#include "liftforge/field.hpp"

namespace liftforge {

/// Desk-scale capacity limits.  Full-subset enumeration walks 2^n subsets, so
/// it is rejected above max_full_ground (default 24, lowerable via the
/// LIFTFORGE_MAX_GROUND environment variable or --max-ground).
namespace caps {
int max_full_ground();
void set_max_full_ground(int n);
int max_iso_ground();
void set_max_iso_ground(int n);
}  // namespace caps

namespace detail {
class MatroidCore;
}

/// An immutable matroid given by a rank oracle on subsets of {0..n-1}.
///
/// Values are cheap to copy (shared core).  A full rank table (2^n bytes) can
/// be attached lazily with materialize(); once present, rank queries are
/// table lookups.  Cores without a table answer each query by computation;
/// expensive cores keep their own thread-safe memo.
class Matroid {
 public:
  Matroid();  // the empty matroid (size 0)

  int size() const;
  SmallSet ground() const;
  int rank(const SmallSet& x) const;
  int rank() const;
  int nullity(const SmallSet& x) const { return x.count() - rank(x); }
  int corank() const { return size() - rank(); }

  bool independent(const SmallSet& x) const { return rank(x) == x.count(); }
  bool dependent(const SmallSet& x) const { return !independent(x); }
  bool spanning(const SmallSet& x) const { return rank(x) == rank(); }
  bool is_basis(const SmallSet& x) const { return spanning(x) && independent(x); }
  /// Minimal dependent set: r(X) = |X|-1 and every one-element deletion is
  /// independent.
  bool is_circuit(const SmallSet& x) const;
  bool is_loop(int e) const { return rank(SmallSet::single(e)) == 0; }
  bool is_coloop(int e) const;

  /// { e : r(X + e) = r(X) }.
  SmallSet closure(const SmallSet& x) const;

  /// Builds the full rank table if absent; throws CapacityError above the
  /// full-ground limit.  Safe to call concurrently.
  const Matroid& materialize() const;
  bool has_table() const;
  const std::vector<std::uint8_t>& table() const;  // materializes first

  /// All circuits in canonical (ascending bitset-integer) order.  Cached.
  const std::vector<SmallSet>& circuits() const;

  /// Short human-readable construction label, e.g. "uniform(2,4)".
  const std::string& label() const;

  bool same_core(const Matroid& o) const { return core_ == o.core_; }

  explicit Matroid(std::shared_ptr<const detail::MatroidCore> core);
  const detail::MatroidCore& core() const { return *core_; }

 private:
  std::shared_ptr<const detail::MatroidCore> core_;
};

// ---- constructors ----------------------------------------------------------

Matroid uniform_matroid(int r, int n);
Matroid free_matroid(int n);
Matroid rank_zero_matroid(int n);
/// Multigraph cycle matroid; vertices 0..vcount-1, loops and parallel edges
/// allowed.  Element i is edges[i].
Matroid graphic_matroid(int vcount, std::vector<std::pair<int, int>> edges);
/// Column matroid of a matrix over a finite field.
Matroid linear_matroid(FieldMatrix a);
/// Validates that `bases` is nonempty, equicardinal and exchange-closed;
/// throws ValidationError with a witness pair otherwise.
Matroid basis_matroid(int n, std::vector<SmallSet> bases);
/// Rank table given directly; table[x] for every x in 0..2^n-1.  Not
/// validated; run check_rank_axioms to validate.
Matroid table_matroid(int n, std::vector<std::uint8_t> table, std::string label = "table");
/// Arbitrary rank oracle.  `memoize` attaches a thread-safe per-call memo for
/// oracles that are expensive to evaluate.
Matroid oracle_matroid(int n, std::function<int(const SmallSet&)> fn, std::string label,
                       bool memoize = false);

/// PG(dim, q): points plus the linear matroid over them.
struct ProjectiveGeometry {
  FieldMatrix points;
  Matroid matroid;
};
ProjectiveGeometry projective_geometry(int dim, const Field& f);

// ---- derived matroids ------------------------------------------------------

Matroid dual(const Matroid& m);
/// Rank capped at r(M) - t.
Matroid truncation(const Matroid& m, int t);
/// Matroid on X with elements re-indexed 0..|X|-1 in ascending element order.
Matroid restriction(const Matroid& m, const SmallSet& x);

// ---- families and verdicts -------------------------------------------------

/// The circuits of a matroid, indexed; index i names the i-th circuit in
/// canonical order.
struct CircuitFamily {
  Matroid base;
  std::vector<SmallSet> sets;

  int size() const { return static_cast<int>(sets.size()); }
  /// Index of a circuit, or -1.
  int index_of(const SmallSet& c) const;
  /// Indices of the circuits of base|X, as a set over {0..size-1}.
  SmallSet circuits_within(const SmallSet& x) const;
};
CircuitFamily circuit_family(const Matroid& m);

struct Verdict {
  bool pass = true;
  std::string witness;  // empty on pass
  explicit operator bool() const { return pass; }
};

/// Rank-axiom check: normalization, unit increase, submodularity.
/// Exhaustive for size <= 12 (all subset pairs); above that a fixed number of
/// seeded samples.  The matroid is materialized first.
Verdict check_rank_axioms(const Matroid& m, std::uint64_t seed = 0);
/// Axiom check against the oracle without materializing: always sampled.
/// Used for matroids whose ground set is too large for a table.
Verdict check_rank_axioms_sampled(const Matroid& m, int samples, std::uint64_t seed = 0);

/// PASS iff cl_K(X) is contained in cl_Mq(X) for every subset X; this is the
/// standard test for Mq being a quotient (projection) of K.  Grounds must
/// match.  The witness is the canonically least failing (X, e).
Verdict is_quotient(const Matroid& mq, const Matroid& k);
inline Verdict is_lift_of(const Matroid& k, const Matroid& m) { return is_quotient(m, k); }

/// A ground-set bijection carrying the rank function of a onto b, or nullopt.
/// Backtracking over signature-compatible assignments; both matroids are
/// materialized.  Intended for ground size <= caps::max_iso_ground().
std::optional<std::vector<int>> isomorphism(const Matroid& a, const Matroid& b);

/// FNV-1a over the rank table bytes in subset order.
std::uint64_t rank_table_hash(const Matroid& m);

}  // namespace liftforge
