#include "liftforge/lift.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include "liftforge/errors.hpp"
#include "liftforge/parallel.hpp"

namespace liftforge {

CircuitSpace circuit_space(const Matroid& base, Matroid n) {
  return circuit_space(circuit_family(base), std::move(n));
}

CircuitSpace circuit_space(CircuitFamily family, Matroid n) {
  if (n.size() != family.size()) {
    throw ValidationError("circuit-space matroid has ground size " + std::to_string(n.size()) +
                          " but the base has " + std::to_string(family.size()) + " circuits");
  }
  return CircuitSpace{std::move(family), std::move(n)};
}

SmallSet fundamental_circuits(const CircuitFamily& family, const SmallSet& basis) {
  const Matroid& m = family.base;
  if (!m.is_basis(basis)) {
    throw ValidationError("set " + basis.to_string() + " is not a basis");
  }
  SmallSet out;
  (m.ground() - basis).for_each([&](int e) {
    // The unique circuit inside basis + e.
    SmallSet be = basis.with(e);
    int found = -1;
    for (int i = 0; i < family.size(); ++i) {
      if (family.sets[i].subset_of(be) && family.sets[i].test(e)) {
        found = i;
        break;
      }
    }
    if (found < 0) throw std::logic_error("fundamental circuit missing from family");
    out.set(found);
  });
  return out;
}

namespace {

// Full perfection test on an explicit member list.
bool perfect_members(const Matroid& base, const std::vector<SmallSet>& members) {
  SmallSet u;
  for (const auto& c : members) u |= c;
  if (u.count() - base.rank(u) != static_cast<int>(members.size())) return false;
  for (size_t i = 0; i < members.size(); ++i) {
    SmallSet others;
    for (size_t j = 0; j < members.size(); ++j) {
      if (j != i) others |= members[j];
    }
    if (members[i].subset_of(others)) return false;
  }
  return true;
}

}  // namespace

bool is_perfect(const CircuitFamily& family, const SmallSet& members) {
  std::vector<SmallSet> sets;
  members.for_each([&](int i) {
    if (i >= family.size()) throw std::out_of_range("circuit index out of range");
    sets.push_back(family.sets[i]);
  });
  return perfect_members(family.base, sets);
}

std::vector<SmallSet> enumerate_perfect(const CircuitFamily& family,
                                        const PerfectEnumOptions& opts) {
  int c = family.size();
  if (c > opts.max_circuits) {
    throw CapacityError("perfect-collection enumeration over " + std::to_string(c) +
                        " circuits exceeds the configured limit " +
                        std::to_string(opts.max_circuits));
  }
  const Matroid& base = family.base;
  std::vector<SmallSet> out;
  std::vector<int> path;
  std::vector<SmallSet> path_sets;
  SmallSet current;

  // Every subset of a perfect collection is perfect (restrict to the union
  // and apply the fundamental-circuit description), so the family is
  // subset-closed and depth-first search with pruning reaches all of it.
  std::function<void(SmallSet, int)> dfs = [&](SmallSet u, int start) {
    out.push_back(current);
    if (static_cast<std::int64_t>(out.size()) > opts.max_collections) {
      throw CapacityError("more than " + std::to_string(opts.max_collections) +
                          " perfect collections");
    }
    for (int j = start; j < c; ++j) {
      const SmallSet& cand = family.sets[j];
      SmallSet u2 = u | cand;
      if (u2.count() - base.rank(u2) != static_cast<int>(path.size()) + 1) continue;
      if (cand.subset_of(u)) continue;
      bool contained = false;
      for (size_t i = 0; i < path.size() && !contained; ++i) {
        SmallSet others = cand;
        for (size_t k = 0; k < path.size(); ++k) {
          if (k != i) others |= path_sets[k];
        }
        if (path_sets[i].subset_of(others)) contained = true;
      }
      if (contained) continue;
      path.push_back(j);
      path_sets.push_back(cand);
      current.set(j);
      dfs(u2, j + 1);
      current.reset(j);
      path_sets.pop_back();
      path.pop_back();
    }
  };
  dfs(SmallSet{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

StarReport satisfies_star(const CircuitSpace& ns, const PerfectEnumOptions& opts) {
  const CircuitFamily& family = ns.family;
  std::vector<SmallSet> collections = enumerate_perfect(family, opts);
  int c = family.size();

  // Scan collections in canonical order; the least (collection, circuit)
  // violation wins, so chunked parallel scans agree with a sequential one.
  struct Violation {
    std::int64_t coll = -1;
    int circuit = -1;
  };
  int workers = worker_count();
  std::vector<Violation> found(std::max(1, workers));
  std::atomic<int> slot{0};
  parallel_chunks(static_cast<std::int64_t>(collections.size()), workers,
                  [&](std::int64_t lo, std::int64_t hi) {
                    Violation best;
                    for (std::int64_t ci = lo; ci < hi && best.coll < 0; ++ci) {
                      const SmallSet& coll = collections[ci];
                      SmallSet u;
                      coll.for_each([&](int i) { u |= family.sets[i]; });
                      int base_rank = ns.n.rank(coll);
                      for (int t = 0; t < c; ++t) {
                        if (coll.test(t) || !family.sets[t].subset_of(u)) continue;
                        if (ns.n.rank(coll.with(t)) != base_rank) {
                          best = {ci, t};
                          break;
                        }
                      }
                    }
                    found[slot.fetch_add(1)] = best;
                  });
  Violation best;
  for (const auto& v : found) {
    if (v.coll < 0) continue;
    if (best.coll < 0 || v.coll < best.coll ||
        (v.coll == best.coll && v.circuit < best.circuit)) {
      best = v;
    }
  }
  if (best.coll < 0) return {};
  StarReport r;
  r.pass = false;
  r.collection = collections[best.coll];
  r.circuit = best.circuit;
  r.witness = "perfect collection " + r.collection.to_string() + " spans circuit " +
              std::to_string(best.circuit) + " = " + family.sets[best.circuit].to_string() +
              " of the base, but that circuit is outside its closure in N";
  return r;
}

Matroid lift(const Matroid& m, const CircuitSpace& ns, bool check,
             const PerfectEnumOptions& opts) {
  if (!ns.family.base.same_core(m)) {
    // A foreign circuit space is fine as long as it lists exactly the
    // circuits of m.
    if (ns.family.base.size() != m.size() || ns.family.sets != m.circuits()) {
      throw ValidationError("circuit space does not match the base matroid");
    }
  }
  if (check) {
    StarReport star = satisfies_star(ns, opts);
    if (!star) throw ConstructionError("lift rejected: " + star.witness);
  }
  CircuitFamily family = ns.family;
  Matroid n = ns.n;
  Matroid base = m;
  Matroid lifted = oracle_matroid(
      m.size(),
      [family, n, base](const SmallSet& x) {
        return base.rank(x) + n.rank(family.circuits_within(x));
      },
      "lift(" + m.label() + ";" + n.label() + ")", /*memoize=*/true);
  if (lifted.rank() != m.rank() + n.rank()) {
    throw std::logic_error("lift rank is not r(M) + r(N)");
  }
  return lifted;
}

LinearClassReport is_linear_class(const CircuitFamily& family, const SmallSet& members) {
  int c = family.size();
  const Matroid& base = family.base;
  auto idx = members.elements();
  for (int i : idx) {
    if (i >= c) throw std::out_of_range("circuit index out of range");
  }
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = a + 1; b < idx.size(); ++b) {
      SmallSet u = family.sets[idx[a]] | family.sets[idx[b]];
      if (u.count() - base.rank(u) != 2) continue;
      for (int t = 0; t < c; ++t) {
        if (!members.test(t) && family.sets[t].subset_of(u)) {
          LinearClassReport r;
          r.pass = false;
          r.c1 = idx[a];
          r.c2 = idx[b];
          r.c = t;
          r.witness = "circuits " + std::to_string(idx[a]) + " and " + std::to_string(idx[b]) +
                      " span a nullity-2 union containing circuit " + std::to_string(t) +
                      " = " + family.sets[t].to_string() + " which is outside the class";
          return r;
        }
      }
    }
  }
  return {};
}

CircuitSpace loop_class_space(CircuitFamily family, const SmallSet& loops) {
  int c = family.size();
  SmallSet nonloops = SmallSet::first_n(c) - loops;
  Matroid n = oracle_matroid(
      c,
      [nonloops](const SmallSet& s) { return s.intersects(nonloops) ? 1 : 0; },
      "loopclass(" + std::to_string(loops.count()) + "/" + std::to_string(c) + ")");
  return CircuitSpace{std::move(family), std::move(n)};
}

Matroid brylawski(const Matroid& m, const SmallSet& class_members) {
  CircuitFamily family = circuit_family(m);
  LinearClassReport lc = is_linear_class(family, class_members);
  if (!lc) throw ConstructionError("not a linear class: " + lc.witness);
  CircuitSpace ns = loop_class_space(std::move(family), class_members);
  // A valid linear class always satisfies the closure condition for this
  // rank-<=1 space, so the exponential check is skipped.
  return lift(m, ns, /*check=*/false);
}

CircuitSpace rank3_circuit_space(const Matroid& m) {
  if (m.corank() < 3) {
    throw ConstructionError("rank-3 circuit space needs corank >= 3, got corank " +
                            std::to_string(m.corank()));
  }
  CircuitFamily family = circuit_family(m);
  int c = family.size();
  if (c > caps::max_full_ground()) {
    throw CapacityError("rank-3 circuit space table over " + std::to_string(c) + " circuits");
  }
  const Matroid& base = family.base;
  auto independent = [&](const SmallSet& s) {
    if (s.count() > 3) return false;
    auto idx = s.elements();
    int subsets = 1 << idx.size();
    for (int mask = 1; mask < subsets; ++mask) {
      SmallSet u;
      int size = 0;
      for (size_t i = 0; i < idx.size(); ++i) {
        if ((mask >> i) & 1) {
          u |= family.sets[idx[i]];
          ++size;
        }
      }
      if (size > u.count() - base.rank(u)) return false;
    }
    return true;
  };
  // Materialize the rank table from the independence family.
  std::uint64_t total = std::uint64_t{1} << c;
  std::vector<std::uint8_t> table(total, 0);
  for (std::uint64_t x = 1; x < total; ++x) {
    SmallSet s = SmallSet::from_index(x);
    if (s.count() <= 3 && independent(s)) {
      table[x] = static_cast<std::uint8_t>(s.count());
    } else {
      std::uint8_t best = 0;
      std::uint64_t w = x;
      while (w) {
        std::uint64_t low = w & (~w + 1);
        best = std::max(best, table[x ^ low]);
        w ^= low;
      }
      table[x] = best;
    }
  }
  Matroid n = table_matroid(c, std::move(table), "rank3(" + m.label() + ")");
  if (n.rank() != 3) throw std::logic_error("rank-3 circuit space has rank " + std::to_string(n.rank()));
  return CircuitSpace{std::move(family), std::move(n)};
}

bool has_independent_circuit_collection(const CircuitSpace& ns, const SmallSet& x, int k) {
  if (k == 0) return true;
  auto inside = ns.family.circuits_within(x).elements();
  if (static_cast<int>(inside.size()) < k) return false;
  // Grow N-independent collections only; independence is hereditary.
  std::function<bool(SmallSet, int, int)> grow = [&](SmallSet cur, int depth, int start) {
    if (depth == k) return true;
    for (size_t i = start; i < inside.size(); ++i) {
      SmallSet next = cur.with(inside[i]);
      if (ns.n.rank(next) != depth + 1) continue;
      if (grow(next, depth + 1, static_cast<int>(i) + 1)) return true;
    }
    return false;
  };
  return grow(SmallSet{}, 0, 0);
}

}  // namespace liftforge
