#include "liftforge/gain.hpp"

#include <algorithm>
#include <set>

#include "liftforge/errors.hpp"
#include "liftforge/parallel.hpp"

namespace liftforge {

GainGraph::GainGraph(int n, FiniteGroup group) : n_(n), group_(std::move(group)) {
  int order = group_.order();
  edges_.reserve(n * (n - 1) / 2 * order);
  std::vector<std::pair<int, int>> plain;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int a = 0; a < order; ++a) {
        edges_.push_back(GainEdge{u, v, a});
        plain.emplace_back(u, v);
      }
    }
  }
  graphic_ = graphic_matroid(n, std::move(plain));
}

GainGraph GainGraph::complete(int n, FiniteGroup group) {
  if (n < 3) throw ParseError("gain graphs need at least 3 vertices");
  long long edges = static_cast<long long>(n) * (n - 1) / 2 * group.order();
  if (edges > SmallSet::kMaxElements) {
    throw CapacityError("K_" + std::to_string(n) + " over a group of order " +
                        std::to_string(group.order()) + " has " + std::to_string(edges) +
                        " edges, beyond the supported " + std::to_string(SmallSet::kMaxElements));
  }
  return GainGraph(n, std::move(group));
}

int GainGraph::edge_index(int u, int v, int label) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v || label < 0 || label >= group_.order()) {
    throw std::out_of_range("bad edge coordinates");
  }
  // Pairs (u,v) are laid out lexicographically, each pair holding a full
  // block of labels.
  int pair_index = 0;
  for (int a = 0; a < u; ++a) pair_index += n_ - 1 - a;
  pair_index += v - u - 1;
  return pair_index * group_.order() + label;
}

SmallSet GainGraph::edges_labeled(const std::vector<int>& labels) const {
  SmallSet out;
  for (int i = 0; i < edge_count(); ++i) {
    for (int l : labels) {
      if (edges_[i].label == l) {
        out.set(i);
        break;
      }
    }
  }
  return out;
}

std::string GainGraph::edge_name(int i) const {
  const GainEdge& e = edges_[i];
  return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + ":" +
         group_.element_name(e.label);
}

std::vector<Cycle> enumerate_cycles(const GainGraph& g) {
  int n = g.vertex_count();
  int order = g.group().order();
  if (n > 5 || order > 8) {
    throw CapacityError("cycle enumeration limited to 5 vertices and group order 8");
  }
  std::vector<Cycle> out;

  // Parallel pairs: every two edges on the same vertex pair form a cycle.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int a = 0; a < order; ++a) {
        for (int b = a + 1; b < order; ++b) {
          Cycle c;
          c.vertices = {u, v};
          c.edge_ids = {g.edge_index(u, v, a), g.edge_index(u, v, b)};
          c.edges = SmallSet::of({c.edge_ids[0], c.edge_ids[1]});
          out.push_back(std::move(c));
        }
      }
    }
  }

  // Longer cycles: a vertex subset, a cyclic order (least vertex first,
  // orientation fixed by second < last), and one label per consecutive pair.
  std::vector<int> verts;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    verts.clear();
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) verts.push_back(v);
    }
    int k = static_cast<int>(verts.size());
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;  // one orientation per cycle
      std::vector<int> seq;
      seq.push_back(verts[0]);
      seq.insert(seq.end(), rest.begin(), rest.end());
      long long combos = 1;
      for (int t = 0; t < k; ++t) combos *= order;
      for (long long code = 0; code < combos; ++code) {
        Cycle c;
        c.vertices = seq;
        c.edge_ids.resize(k);
        long long rem = code;
        for (int t = 0; t < k; ++t) {
          int label = static_cast<int>(rem % order);
          rem /= order;
          c.edge_ids[t] = g.edge_index(seq[t], seq[(t + 1) % k], label);
          c.edges.set(c.edge_ids[t]);
        }
        out.push_back(std::move(c));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.edges < b.edges; });
  return out;
}

std::vector<int> phi_values(const GainGraph& g, const Cycle& c) {
  const FiniteGroup& gr = g.group();
  int k = c.length();
  std::set<int> values;
  // Walks around the cycle: each starting position, both directions.
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> vseq = c.vertices;
    std::vector<int> eseq = c.edge_ids;
    if (dir == 1) {
      // Reverse traversal: vertex sequence reversed, edges shift accordingly.
      std::reverse(vseq.begin(), vseq.end());
      std::rotate(vseq.begin(), vseq.end() - 1, vseq.end());
      std::reverse(eseq.begin(), eseq.end());
    }
    for (int start = 0; start < k; ++start) {
      int value = gr.identity();
      for (int t = 0; t < k; ++t) {
        int pos = (start + t) % k;
        const GainEdge& e = g.edge(eseq[pos]);
        int from = vseq[pos];
        int phi = e.label;
        // The edge is oriented u -> v; traversing v -> u contributes the
        // inverse.
        if (from == e.v) phi = gr.inverse(phi);
        value = gr.compose(value, phi);
      }
      values.insert(value);
    }
  }
  return std::vector<int>(values.begin(), values.end());
}

bool is_balanced(const GainGraph& g, const Cycle& c) {
  auto vals = phi_values(g, c);
  return std::binary_search(vals.begin(), vals.end(), g.group().identity());
}

Matroid lg_matroid(const GainGraph& g) {
  int m = g.edge_count();
  if (m > caps::max_full_ground()) {
    throw CapacityError("lift matroid table needs ground <= " +
                        std::to_string(caps::max_full_ground()) + ", got " + std::to_string(m));
  }
  auto cycles = enumerate_cycles(g);
  int nc = static_cast<int>(cycles.size());
  std::vector<char> balanced(nc);
  for (int i = 0; i < nc; ++i) balanced[i] = is_balanced(g, cycles[i]);

  // Route one: the independence definition.  Independent sets span at most
  // one cycle and no balanced one.
  std::uint64_t total = std::uint64_t{1} << m;
  std::vector<std::uint8_t> indep(total);
  parallel_chunks(static_cast<std::int64_t>(total), worker_count(),
                  [&](std::int64_t lo, std::int64_t hi) {
                    for (std::int64_t xi = lo; xi < hi; ++xi) {
                      SmallSet x = SmallSet::from_index(static_cast<std::uint64_t>(xi));
                      int seen = 0;
                      bool ok = true;
                      for (int i = 0; i < nc && ok; ++i) {
                        if (!cycles[i].edges.subset_of(x)) continue;
                        if (balanced[i] || ++seen > 1) ok = false;
                      }
                      indep[xi] = ok;
                    }
                  });
  std::vector<std::uint8_t> table(total);
  table[0] = 0;
  for (std::uint64_t x = 1; x < total; ++x) {
    if (indep[x]) {
      table[x] = static_cast<std::uint8_t>(__builtin_popcountll(x));
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

  // Route two: the elementary lift of the balanced linear class.  The cycle
  // list must agree with the circuits of the cycle matroid, and the two rank
  // tables must agree everywhere.
  const Matroid& graphic = g.cycle_matroid();
  const auto& circ = graphic.circuits();
  if (circ.size() != cycles.size()) {
    throw std::logic_error("cycle enumeration disagrees with graphic circuits");
  }
  SmallSet balanced_class;
  for (int i = 0; i < nc; ++i) {
    if (!(circ[i] == cycles[i].edges)) {
      throw std::logic_error("cycle enumeration order disagrees with graphic circuits");
    }
    if (balanced[i]) balanced_class.set(i);
  }
  Matroid via_class = brylawski(graphic, balanced_class);
  via_class.materialize();
  const auto& t2 = via_class.table();
  for (std::uint64_t x = 0; x < total; ++x) {
    if (table[x] != t2[x]) {
      throw std::logic_error("lift matroid construction mismatch at " +
                             SmallSet::from_index(x).to_string());
    }
  }
  return table_matroid(m, std::move(table),
                       "LG(" + std::to_string(g.vertex_count()) + "," + g.group().name() + ")");
}

namespace {
int checked_divisor(int j, int i) {
  if (i < 1 || j < i || j % i != 0) {
    throw ParseError("label projection needs a positive divisor i of j, got i=" +
                     std::to_string(i) + " j=" + std::to_string(j));
  }
  return i;
}
}  // namespace

LabelProjection::LabelProjection(int p, int j, int i)
    : p_(p),
      j_(j),
      i_(checked_divisor(j, i)),
      subfield_(Field::gf(p, i)),
      pg_(projective_geometry(j / i - 1, subfield_)) {}

std::vector<int> LabelProjection::vector_of(const FiniteGroup& zpj, int elem) const {
  const auto& orders = zpj.cyclic_orders();
  if (static_cast<int>(orders.size()) != j_ ||
      !std::all_of(orders.begin(), orders.end(), [&](int d) { return d == p_; })) {
    throw ValidationError("group is not Z_" + std::to_string(p_) + "^" + std::to_string(j_));
  }
  auto coords = zpj.coords(elem);
  int blocks = j_ / i_;
  std::vector<int> v(blocks);
  for (int b = 0; b < blocks; ++b) {
    std::vector<int> chunk(coords.begin() + b * i_, coords.begin() + (b + 1) * i_);
    v[b] = subfield_.from_coeffs(chunk);
  }
  return v;
}

int LabelProjection::point_of(const FiniteGroup& zpj, int elem) const {
  if (elem == zpj.identity()) {
    throw std::invalid_argument("identity label has no projective point");
  }
  return projective_point_index(pg_.points, vector_of(zpj, elem));
}

CircuitSpace pg_circuit_space(const GainGraph& g, const LabelProjection& proj, Matroid k) {
  if (k.size() != proj.geometry().points.cols()) {
    throw ValidationError("K has ground size " + std::to_string(k.size()) +
                          " but the projective geometry has " +
                          std::to_string(proj.geometry().points.cols()) + " points");
  }
  auto cycles = enumerate_cycles(g);
  int nc = static_cast<int>(cycles.size());
  if (nc > SmallSet::kMaxElements) throw CapacityError("too many cycles to index");
  // Per cycle: -1 for balanced, else the common projective point of its two
  // walk values.
  std::vector<int> point(nc, -1);
  for (int i = 0; i < nc; ++i) {
    auto vals = phi_values(g, cycles[i]);
    if (std::binary_search(vals.begin(), vals.end(), g.group().identity())) continue;
    int pt = proj.point_of(g.group(), vals[0]);
    for (size_t t = 1; t < vals.size(); ++t) {
      if (proj.point_of(g.group(), vals[t]) != pt) {
        throw std::logic_error("walk values of an unbalanced cycle hit distinct points");
      }
    }
    point[i] = pt;
  }
  CircuitFamily family;
  family.base = g.cycle_matroid();
  family.sets.reserve(nc);
  for (const auto& c : cycles) family.sets.push_back(c.edges);

  Matroid n = oracle_matroid(
      nc,
      [point, k](const SmallSet& s) {
        SmallSet pts;
        s.for_each([&](int i) {
          if (point[i] >= 0) pts.set(point[i]);
        });
        return k.rank(pts);
      },
      "cyclespace(" + k.label() + ")");
  return CircuitSpace{std::move(family), std::move(n)};
}

PgLift pg_truncation_lift(int n, int p, int j, int i) {
  if (i < 1 || i > j) throw ParseError("need 1 <= i <= j");
  FiniteGroup zpj = FiniteGroup::abelian(std::vector<int>(j, p));
  GainGraph g = GainGraph::complete(n, zpj);
  LabelProjection proj(p, j, 1);
  Matroid k = truncation(proj.geometry().matroid, j - i);
  CircuitSpace ns = pg_circuit_space(g, proj, k);
  PerfectEnumOptions opts;
  opts.max_circuits = SmallSet::kMaxElements;
  Matroid lifted = lift(g.cycle_matroid(), ns, /*check=*/true, opts);
  if (lifted.rank() != n - 1 + i) {
    throw std::logic_error("labeled lift has rank " + std::to_string(lifted.rank()) +
                           ", expected " + std::to_string(n - 1 + i));
  }
  Verdict member = class_membership(lifted, g);
  if (!member) {
    throw std::logic_error("labeled lift does not respect the labeling: " + member.witness);
  }
  return PgLift{std::move(g), std::move(ns), std::move(lifted)};
}

Verdict class_membership(const Matroid& m, const GainGraph& g) {
  if (m.size() != g.edge_count()) {
    throw ValidationError("matroid ground does not match the gain graph edge set");
  }
  Verdict quotient = is_quotient(g.cycle_matroid(), m);
  if (!quotient) {
    return {false, "not a lift of the cycle matroid: " + quotient.witness};
  }
  auto cycles = enumerate_cycles(g);
  for (size_t i = 0; i < cycles.size(); ++i) {
    bool balanced = is_balanced(g, cycles[i]);
    bool circuit = m.is_circuit(cycles[i].edges);
    if (balanced != circuit) {
      return {false, "cycle " + cycles[i].edges.to_string() + " is " +
                         (balanced ? "balanced but not a circuit" : "a circuit but unbalanced")};
    }
  }
  return {};
}

TildeReport tilde_relation(const Matroid& m, const GainGraph& g) {
  Verdict member = class_membership(m, g);
  if (!member) {
    throw ConstructionError("diagnostics need a lift respecting the labeling: " + member.witness);
  }
  const FiniteGroup& gr = g.group();
  int n = g.vertex_count();
  int order = gr.order();
  TildeReport report;
  m.materialize();

  // Per-label facts: E_{a,identity} spans rank n, and no a-labeled edge lies
  // in the closure of the identity-labeled spanning clique.
  SmallSet e_identity = g.edges_labeled({gr.identity()});
  SmallSet cl_identity = m.closure(e_identity);
  for (int a = 1; a < order && report.local.pass; ++a) {
    int r = m.rank(g.edges_labeled({a, gr.identity()}));
    if (r != n) {
      report.local = {false, "r(E_{" + gr.element_name(a) + ",e}) = " + std::to_string(r) +
                                 ", expected " + std::to_string(n)};
      break;
    }
    if (g.edges_labeled({a}).intersects(cl_identity)) {
      report.local = {false, "E_" + gr.element_name(a) + " meets cl(E_identity)"};
    }
  }

  // Generated-subgroup closure inclusions for generating sets of size <= 2.
  for (int a = 0; a < order && report.generated.pass; ++a) {
    for (int b = a; b < order && report.generated.pass; ++b) {
      std::vector<int> gens;
      if (a != gr.identity()) gens.push_back(a);
      if (b != gr.identity() && b != a) gens.push_back(b);
      std::vector<int> span = gr.generated_subgroup(gens);
      std::vector<int> with_identity = gens;
      with_identity.push_back(gr.identity());
      SmallSet closure = m.closure(g.edges_labeled(with_identity));
      if (!g.edges_labeled(span).subset_of(closure)) {
        report.generated = {false, "E_<{" + gr.element_name(a) + "," + gr.element_name(b) +
                                       "}> escapes cl(E_{A,identity})"};
      }
    }
  }

  // The relation a ~ b <=> r(E_{a,b,identity}) = n on non-identity labels.
  std::vector<std::vector<char>> rel(order, std::vector<char>(order, 0));
  for (int a = 1; a < order; ++a) {
    for (int b = a; b < order; ++b) {
      int r = m.rank(g.edges_labeled({a, b, gr.identity()}));
      rel[a][b] = rel[b][a] = (r == n);
    }
  }
  for (int a = 1; a < order && report.equivalence.pass; ++a) {
    if (!rel[a][a]) {
      report.equivalence = {false, "~ is not reflexive at " + gr.element_name(a)};
    }
  }
  for (int a = 1; a < order && report.equivalence.pass; ++a) {
    for (int b = 1; b < order && report.equivalence.pass; ++b) {
      for (int c = 1; c < order; ++c) {
        if (rel[a][b] && rel[b][c] && !rel[a][c]) {
          report.equivalence = {false, "~ fails transitivity on (" + gr.element_name(a) + "," +
                                           gr.element_name(b) + "," + gr.element_name(c) + ")"};
          break;
        }
      }
    }
  }

  // Classes as connected components of the relation graph, least label first.
  std::vector<int> cls(order, -1);
  for (int a = 1; a < order; ++a) {
    if (cls[a] >= 0) continue;
    int id = static_cast<int>(report.classes.size());
    std::vector<int> stack{a};
    cls[a] = id;
    std::vector<int> members;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y = 1; y < order; ++y) {
        if (rel[x][y] && cls[y] < 0) {
          cls[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    report.classes.push_back(std::move(members));
  }

  for (const auto& cl : report.classes) {
    std::vector<int> with_identity = cl;
    with_identity.push_back(gr.identity());
    int r = m.rank(g.edges_labeled(with_identity));
    if (r != n && report.class_rank.pass) {
      report.class_rank = {false, "class containing " + gr.element_name(cl.front()) +
                                      " spans rank " + std::to_string(r)};
    }
    if (!gr.is_subgroup(with_identity) && report.subgroup.pass) {
      report.subgroup = {false, "class containing " + gr.element_name(cl.front()) +
                                    " plus identity is not a subgroup"};
    }
  }
  return report;
}

}  // namespace liftforge
