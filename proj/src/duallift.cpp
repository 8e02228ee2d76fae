#include "liftforge/duallift.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include "liftforge/errors.hpp"
#include "liftforge/parallel.hpp"

namespace liftforge {

std::vector<SmallSet> hyperplanes(const Matroid& k) {
  k.materialize();
  const auto& t = k.table();
  int n = k.size();
  int r = k.rank();
  std::vector<SmallSet> out;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (t[x] != r - 1) continue;
    bool flat = true;
    for (int e = 0; e < n && flat; ++e) {
      if (!((x >> e) & 1) && t[x | (1ULL << e)] == r - 1) flat = false;
    }
    if (flat) out.push_back(SmallSet::from_index(x));
  }
  // Hyperplanes complement the dual's circuits; verify the pairing.
  Matroid kd = dual(k);
  std::vector<SmallSet> complements;
  for (const auto& c : kd.circuits()) complements.push_back(k.ground() - c);
  std::sort(complements.begin(), complements.end());
  if (complements != out) {
    throw std::logic_error("hyperplanes do not complement the dual circuits");
  }
  return out;
}

HyperplaneSpace hyperplane_space(const Matroid& base, Matroid n) {
  std::vector<SmallSet> sets = hyperplanes(base);
  if (n.size() != static_cast<int>(sets.size())) {
    throw ValidationError("hyperplane-space matroid has ground size " + std::to_string(n.size()) +
                          " but the base has " + std::to_string(sets.size()) + " hyperplanes");
  }
  return HyperplaneSpace{base, std::move(sets), std::move(n)};
}

SmallSet HyperplaneSpace::hyperplanes_over(const SmallSet& x) const {
  SmallSet out;
  for (int i = 0; i < size(); ++i) {
    if (x.subset_of(sets[i])) out.set(i);
  }
  return out;
}

namespace {

bool perfect_hyperplane_members(const Matroid& base, const std::vector<SmallSet>& members) {
  SmallSet inter = base.ground();
  for (const auto& h : members) inter &= h;
  if (base.rank(inter) != base.rank() - static_cast<int>(members.size())) return false;
  for (size_t i = 0; i < members.size(); ++i) {
    SmallSet others = base.ground();
    for (size_t j = 0; j < members.size(); ++j) {
      if (j != i) others &= members[j];
    }
    if (others.subset_of(members[i])) return false;
  }
  return true;
}

}  // namespace

bool is_perfect_hyperplanes(const HyperplaneSpace& hs, const SmallSet& members) {
  std::vector<SmallSet> sets;
  members.for_each([&](int i) {
    if (i >= hs.size()) throw std::out_of_range("hyperplane index out of range");
    sets.push_back(hs.sets[i]);
  });
  return perfect_hyperplane_members(hs.base, sets);
}

std::vector<SmallSet> enumerate_perfect_hyperplanes(const HyperplaneSpace& hs,
                                                    const PerfectEnumOptions& opts) {
  int c = hs.size();
  if (c > opts.max_circuits) {
    throw CapacityError("perfect-collection enumeration over " + std::to_string(c) +
                        " hyperplanes exceeds the configured limit");
  }
  const Matroid& base = hs.base;
  int full = base.rank();
  std::vector<SmallSet> out;
  std::vector<SmallSet> path_sets;
  SmallSet current;

  // Mirror of the circuit-side search: subsets of perfect collections are
  // perfect (complement into the dual), so pruned DFS is exhaustive.
  std::function<void(SmallSet, int)> dfs = [&](SmallSet inter, int start) {
    out.push_back(current);
    if (static_cast<std::int64_t>(out.size()) > opts.max_collections) {
      throw CapacityError("too many perfect hyperplane collections");
    }
    int depth = static_cast<int>(path_sets.size());
    for (int j = start; j < c; ++j) {
      SmallSet inter2 = inter & hs.sets[j];
      if (base.rank(inter2) != full - depth - 1) continue;
      // No member may contain the intersection of the others.  For the new
      // member the others intersect to `inter`; for an old member i the
      // others are the remaining old members and the new hyperplane.
      bool contained = inter.subset_of(hs.sets[j]);
      for (int i = 0; i < depth && !contained; ++i) {
        SmallSet others = hs.sets[j];
        for (int t = 0; t < depth; ++t) {
          if (t != i) others &= path_sets[t];
        }
        if (others.subset_of(path_sets[i])) contained = true;
      }
      if (contained) continue;
      path_sets.push_back(hs.sets[j]);
      current.set(j);
      dfs(inter2, j + 1);
      current.reset(j);
      path_sets.pop_back();
    }
  };
  dfs(base.ground(), 0);
  std::sort(out.begin(), out.end());
  return out;
}

StarReport satisfies_dual_star(const HyperplaneSpace& hs, const PerfectEnumOptions& opts) {
  std::vector<SmallSet> collections = enumerate_perfect_hyperplanes(hs, opts);
  int c = hs.size();
  struct Violation {
    std::int64_t coll = -1;
    int hyp = -1;
  };
  int workers = worker_count();
  std::vector<Violation> found(std::max(1, workers));
  std::atomic<int> slot{0};
  parallel_chunks(static_cast<std::int64_t>(collections.size()), workers,
                  [&](std::int64_t lo, std::int64_t hi) {
                    Violation best;
                    for (std::int64_t ci = lo; ci < hi && best.coll < 0; ++ci) {
                      const SmallSet& coll = collections[ci];
                      SmallSet inter = hs.base.ground();
                      coll.for_each([&](int i) { inter &= hs.sets[i]; });
                      int base_rank = hs.n.rank(coll);
                      for (int t = 0; t < c; ++t) {
                        if (coll.test(t) || !inter.subset_of(hs.sets[t])) continue;
                        if (hs.n.rank(coll.with(t)) != base_rank) {
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
    if (best.coll < 0 || v.coll < best.coll || (v.coll == best.coll && v.hyp < best.hyp)) best = v;
  }
  if (best.coll < 0) return {};
  StarReport r;
  r.pass = false;
  r.collection = collections[best.coll];
  r.circuit = best.hyp;
  r.witness = "perfect hyperplane collection " + r.collection.to_string() +
              " pins hyperplane " + std::to_string(best.hyp) + " = " +
              hs.sets[best.hyp].to_string() + " outside its closure in N";
  return r;
}

Matroid project(const HyperplaneSpace& hs, bool check, const PerfectEnumOptions& opts) {
  if (check) {
    StarReport star = satisfies_dual_star(hs, opts);
    if (!star) throw ConstructionError("projection rejected: " + star.witness);
  }
  HyperplaneSpace local = hs;
  int rn = hs.n.rank();
  Matroid projected = oracle_matroid(
      hs.base.size(),
      [local, rn](const SmallSet& x) {
        return local.base.rank(x) - rn + local.n.rank(local.hyperplanes_over(x));
      },
      "project(" + hs.base.label() + ";" + hs.n.label() + ")", /*memoize=*/true);
  if (projected.rank() != hs.base.rank() - rn) {
    throw std::logic_error("projection rank is not r(K) - r(N)");
  }
  return projected;
}

Verdict duality_bridge(const HyperplaneSpace& hs) {
  const Matroid& k = hs.base;
  Matroid kd = dual(k);
  CircuitFamily dual_family = circuit_family(kd);
  // Complements pair the dual's circuits with the hyperplanes of K.
  std::vector<int> hyp_of_circuit(dual_family.size(), -1);
  for (int ci = 0; ci < dual_family.size(); ++ci) {
    SmallSet complement = k.ground() - dual_family.sets[ci];
    auto it = std::lower_bound(hs.sets.begin(), hs.sets.end(), complement);
    if (it == hs.sets.end() || !(*it == complement)) {
      throw std::logic_error("dual circuit complement is not a hyperplane");
    }
    hyp_of_circuit[ci] = static_cast<int>(it - hs.sets.begin());
  }
  Matroid n = hs.n;
  Matroid transported = oracle_matroid(
      dual_family.size(),
      [hyp_of_circuit, n](const SmallSet& s) {
        SmallSet mapped;
        s.for_each([&](int i) { mapped.set(hyp_of_circuit[i]); });
        return n.rank(mapped);
      },
      "transport(" + hs.n.label() + ")");
  Matroid via_dual = dual(lift(kd, CircuitSpace{std::move(dual_family), std::move(transported)},
                               /*check=*/false));
  Matroid direct = project(hs, /*check=*/false);
  via_dual.materialize();
  direct.materialize();
  const auto& ta = via_dual.table();
  const auto& tb = direct.table();
  for (std::uint64_t x = 0; x < ta.size(); ++x) {
    if (ta[x] != tb[x]) {
      return {false, "rank tables disagree at " + SmallSet::from_index(x).to_string() +
                         ": dual route " + std::to_string(ta[x]) + ", direct " +
                         std::to_string(tb[x])};
    }
  }
  return {};
}

LinearClassReport is_linear_subclass(const Matroid& k, const std::vector<SmallSet>& hyps,
                                     const SmallSet& members) {
  int c = static_cast<int>(hyps.size());
  auto idx = members.elements();
  for (int i : idx) {
    if (i >= c) throw std::out_of_range("hyperplane index out of range");
  }
  int r = k.rank();
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = a + 1; b < idx.size(); ++b) {
      SmallSet inter = hyps[idx[a]] & hyps[idx[b]];
      if (k.rank(inter) != r - 2) continue;
      for (int t = 0; t < c; ++t) {
        if (!members.test(t) && inter.subset_of(hyps[t])) {
          LinearClassReport rep;
          rep.pass = false;
          rep.c1 = idx[a];
          rep.c2 = idx[b];
          rep.c = t;
          rep.witness = "hyperplanes " + std::to_string(idx[a]) + " and " + std::to_string(idx[b]) +
                        " meet in rank r-2 under hyperplane " + std::to_string(t) +
                        " which is outside the subclass";
          return rep;
        }
      }
    }
  }
  return {};
}

HyperplaneSpace loop_subclass_space(const Matroid& k, const SmallSet& loops) {
  std::vector<SmallSet> sets = hyperplanes(k);
  int c = static_cast<int>(sets.size());
  SmallSet nonloops = SmallSet::first_n(c) - loops;
  Matroid n = oracle_matroid(
      c, [nonloops](const SmallSet& s) { return s.intersects(nonloops) ? 1 : 0; },
      "loopsubclass(" + std::to_string(loops.count()) + "/" + std::to_string(c) + ")");
  return HyperplaneSpace{k, std::move(sets), std::move(n)};
}

Matroid crapo(const Matroid& k, const SmallSet& subclass) {
  std::vector<SmallSet> hyps = hyperplanes(k);
  LinearClassReport lc = is_linear_subclass(k, hyps, subclass);
  if (!lc) throw ConstructionError("not a linear subclass: " + lc.witness);
  HyperplaneSpace hs = loop_subclass_space(k, subclass);
  // A valid linear subclass always satisfies the dual closure condition for
  // this rank-<=1 space (dual of the circuit-side fact), so skip the check.
  return project(hs, /*check=*/false);
}

}  // namespace liftforge
