#pragma once

#include <string>
#include <vector>

#include "liftforge/group.hpp"
#include "liftforge/lift.hpp"
#include "liftforge/matroid.hpp"

namespace liftforge {

/// Edge of a group-labeled graph, oriented from the smaller endpoint to the
/// larger; `label` is a group element index.
struct GainEdge {
  int u, v;
  int label;
};

/// The fully labeled complete graph on n vertices: one edge per vertex pair
/// and group element, in lexicographic (u, v, label) order.
class GainGraph {
 public:
  static GainGraph complete(int n, FiniteGroup group);

  int vertex_count() const { return n_; }
  const FiniteGroup& group() const { return group_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const GainEdge& edge(int i) const { return edges_[i]; }
  int edge_index(int u, int v, int label) const;

  /// The cycle matroid of the underlying multigraph.
  const Matroid& cycle_matroid() const { return graphic_; }

  /// E_A: all edges whose label lies in A.
  SmallSet edges_labeled(const std::vector<int>& labels) const;

  std::string edge_name(int i) const;

 private:
  GainGraph(int n, FiniteGroup group);
  int n_;
  FiniteGroup group_;
  std::vector<GainEdge> edges_;
  Matroid graphic_;
};

/// A cycle of the gain graph: its edge set together with one closed-walk
/// presentation (vertices[i] -> vertices[i+1] along edge_ids[i], wrapping).
/// Length-2 cycles are pairs of parallel edges.
struct Cycle {
  SmallSet edges;
  std::vector<int> vertices;
  std::vector<int> edge_ids;
  int length() const { return static_cast<int>(edge_ids.size()); }
};

/// All cycles, in canonical ascending order of edge set.  These are exactly
/// the circuits of the cycle matroid.
std::vector<Cycle> enumerate_cycles(const GainGraph& g);

/// Values of all 2*length simple closed walks around the cycle (every
/// starting vertex, both directions), deduplicated and sorted.  Closed under
/// inverses; at most two values over an abelian group.
std::vector<int> phi_values(const GainGraph& g, const Cycle& c);

/// A cycle is balanced when some (equivalently every) simple closed walk
/// around it takes the identity value.
bool is_balanced(const GainGraph& g, const Cycle& c);

/// The lift matroid of the balanced cycles: a set is independent when it
/// spans at most one cycle and no balanced one.  Built both from that
/// independence definition and as the elementary lift of the balanced linear
/// class; the two rank tables must agree and the assertion is fatal.
Matroid lg_matroid(const GainGraph& g);

/// Coordinate chunking from Z_p^j onto the points of PG(j/i - 1, p^i): the j
/// coordinates are cut into j/i consecutive blocks, each read as a GF(p^i)
/// element, and the resulting vector is normalized projectively.
class LabelProjection {
 public:
  LabelProjection(int p, int j, int i);

  int p() const { return p_; }
  int j() const { return j_; }
  int i() const { return i_; }
  const Field& subfield() const { return subfield_; }
  const ProjectiveGeometry& geometry() const { return pg_; }

  /// The GF(p^i)^{j/i} vector of a group element of Z_p^j.
  std::vector<int> vector_of(const FiniteGroup& zpj, int elem) const;
  /// Projective point index of a non-identity element.
  int point_of(const FiniteGroup& zpj, int elem) const;

 private:
  int p_, j_, i_;
  Field subfield_;
  ProjectiveGeometry pg_;
};

/// The matroid on the cycles of a Z_p^j-labeled complete graph induced by a
/// matroid K on the points of the projective geometry: balanced cycles are
/// loops, and a set of unbalanced cycles has the K-rank of its point image.
/// Requires the value pair of every unbalanced cycle to land on one point
/// (asserted) and K's ground to be the point set.
CircuitSpace pg_circuit_space(const GainGraph& g, const LabelProjection& proj, Matroid k);

struct PgLift {
  GainGraph graph;
  CircuitSpace space;
  Matroid lifted;
};

/// The rank-i lift of the cycle matroid of K_n^{Z_p^j} whose cycle-circuits
/// are exactly the balanced cycles: K is the (j-i)-th truncation of
/// PG(j-1, p), the projection uses divisor 1, and the lift construction is
/// verified end to end (closure condition, rank n-1+i, circuit trace).
PgLift pg_truncation_lift(int n, int p, int j, int i);

/// PASS iff m is a lift of the cycle matroid and the cycles that are
/// circuits of m are exactly the balanced ones.
Verdict class_membership(const Matroid& m, const GainGraph& g);

/// Diagnostics for a lift that respects the labeling.  Relates non-identity
/// labels a ~ b when E_{a,b,identity} has full rank n in m, and reports:
/// whether ~ is an equivalence, whether each class plus the identity spans
/// rank n and forms a subgroup, plus the per-label rank/closure facts and
/// the generated-subgroup closure inclusions for generating sets of size
/// at most two.
struct TildeReport {
  std::vector<std::vector<int>> classes;  // partition of non-identity labels
  Verdict local;        // r(E_{a,e}) = n and E_a disjoint from cl(E_e)
  Verdict generated;    // E_<A> inside cl(E_{A+e}), |A| <= 2
  Verdict equivalence;  // ~ is transitive
  Verdict class_rank;   // each class + identity spans rank n
  Verdict subgroup;     // each class + identity is a subgroup
  bool pass() const {
    return local.pass && generated.pass && equivalence.pass && class_rank.pass && subgroup.pass;
  }
};
TildeReport tilde_relation(const Matroid& m, const GainGraph& g);

}  // namespace liftforge
