#include "liftforge/derived.hpp"

#include "liftforge/errors.hpp"

namespace liftforge {

Representation make_representation(FieldMatrix a) {
  Matroid m = linear_matroid(a);
  return Representation{std::move(a), std::move(m)};
}

Representation make_representation(FieldMatrix a, const Matroid& declared) {
  Matroid column = linear_matroid(a);
  if (column.size() != declared.size()) {
    throw ValidationError("representation has " + std::to_string(column.size()) +
                          " columns for a matroid on " + std::to_string(declared.size()) +
                          " elements");
  }
  column.materialize();
  declared.materialize();
  const auto& tc = column.table();
  const auto& td = declared.table();
  for (std::size_t x = 0; x < tc.size(); ++x) {
    if (tc[x] != td[x]) {
      throw ValidationError("representation disagrees with the declared matroid at " +
                            SmallSet::from_index(x).to_string());
    }
  }
  return Representation{std::move(a), declared};
}

FieldMatrix derived_matrix(const Representation& rep) {
  const auto& circuits = rep.matroid.circuits();
  int m = rep.matrix.cols();
  FieldMatrix out(rep.matrix.field(), m, static_cast<int>(circuits.size()));
  for (std::size_t ci = 0; ci < circuits.size(); ++ci) {
    auto vec = nullspace_vector(rep.matrix, circuits[ci]);
    if (!vec) {
      throw std::logic_error("no kernel vector supported on circuit " +
                             circuits[ci].to_string());
    }
    for (int r = 0; r < m; ++r) out.at(r, static_cast<int>(ci)) = (*vec)[r];
  }
  return out;
}

CircuitSpace derived_circuit_space(const Representation& rep) {
  CircuitFamily family = circuit_family(rep.matroid);
  FieldMatrix a = derived_matrix(rep);
  Matroid n = linear_matroid(std::move(a));
  int expected = rep.matroid.size() - rep.matroid.rank();
  if (n.rank() != expected) {
    throw std::logic_error("derived matroid has rank " + std::to_string(n.rank()) +
                           ", expected the corank " + std::to_string(expected));
  }
  for (int i = 0; i < n.size(); ++i) {
    if (n.is_loop(i)) throw std::logic_error("derived matroid has a loop");
  }
  return CircuitSpace{std::move(family), std::move(n)};
}

Matroid derived_free_lift(const Representation& rep) {
  CircuitSpace ns = derived_circuit_space(rep);
  PerfectEnumOptions opts;
  opts.max_circuits = SmallSet::kMaxElements;
  StarReport star = satisfies_star(ns, opts);
  if (!star) {
    throw std::logic_error("derived matroid fails the closure condition: " + star.witness);
  }
  Matroid lifted = lift(rep.matroid, ns, /*check=*/false);
  if (lifted.rank() != lifted.size()) {
    throw std::logic_error("derived lift is not free: rank " + std::to_string(lifted.rank()) +
                           " on " + std::to_string(lifted.size()) + " elements");
  }
  return lifted;
}

CircuitSpace truncated_derived_space(const Representation& rep, int k) {
  int corank = rep.matroid.size() - rep.matroid.rank();
  if (k < 1 || k > corank) {
    throw ParseError("truncated derived rank must satisfy 1 <= k <= corank, got " +
                     std::to_string(k));
  }
  CircuitSpace ns = derived_circuit_space(rep);
  return CircuitSpace{std::move(ns.family), truncation(ns.n, corank - k)};
}

}  // namespace liftforge
