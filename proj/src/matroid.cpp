#include "liftforge/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <unordered_map>

#include "liftforge/errors.hpp"
#include "liftforge/parallel.hpp"

namespace liftforge {

namespace caps {
namespace {
std::atomic<int> g_max_full_ground{24};
std::atomic<int> g_max_iso_ground{10};
}  // namespace
int max_full_ground() { return g_max_full_ground.load(); }
void set_max_full_ground(int n) { g_max_full_ground.store(n); }
int max_iso_ground() { return g_max_iso_ground.load(); }
void set_max_iso_ground(int n) { g_max_iso_ground.store(n); }
}  // namespace caps

namespace detail {

class MatroidCore {
 public:
  MatroidCore(int n, std::string label, bool memoize = false)
      : n_(n), label_(std::move(label)), memoize_(memoize) {
    if (n < 0 || n > SmallSet::kMaxElements) {
      throw CapacityError("ground size " + std::to_string(n) + " out of range");
    }
  }
  virtual ~MatroidCore() = default;

  int size() const { return n_; }
  const std::string& label() const { return label_; }
  SmallSet ground() const { return SmallSet::first_n(n_); }

  virtual int rank_of(const SmallSet& x) const = 0;

  int rank(const SmallSet& x) const {
    if (table_ready_.load(std::memory_order_acquire)) return table_[x.index32()];
    if (memoize_) {
      std::lock_guard<std::mutex> lock(memo_mu_);
      auto it = memo_.find(x);
      if (it != memo_.end()) return it->second;
      int r = rank_of(x);
      memo_.emplace(x, r);
      return r;
    }
    return rank_of(x);
  }

  int full_rank() const {
    int r = full_rank_.load(std::memory_order_relaxed);
    if (r < 0) {
      r = rank(ground());
      full_rank_.store(r, std::memory_order_relaxed);
    }
    return r;
  }

  void ensure_table() const {
    std::call_once(table_once_, [this] {
      if (n_ > caps::max_full_ground()) {
        table_error_ = "ground size " + std::to_string(n_) +
                       " exceeds full-enumeration capacity " +
                       std::to_string(caps::max_full_ground());
        return;
      }
      std::int64_t total = std::int64_t{1} << n_;
      std::vector<std::uint8_t> t(total);
      parallel_chunks(total, worker_count(), [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
          t[i] = static_cast<std::uint8_t>(
              rank_of(SmallSet::from_index(static_cast<std::uint64_t>(i))));
        }
      });
      table_ = std::move(t);
      table_ready_.store(true, std::memory_order_release);
    });
    if (!table_ready_.load(std::memory_order_acquire)) throw CapacityError(table_error_);
  }

  bool has_table() const { return table_ready_.load(std::memory_order_acquire); }
  const std::vector<std::uint8_t>& table() const { return table_; }

  const std::vector<SmallSet>& circuits() const {
    std::call_once(circuits_once_, [this] {
      ensure_table();
      std::vector<SmallSet> out;
      std::uint64_t total = std::uint64_t{1} << n_;
      for (std::uint64_t x = 1; x < total; ++x) {
        int cnt = __builtin_popcountll(x);
        if (table_[x] != cnt - 1) continue;
        bool minimal = true;
        std::uint64_t w = x;
        while (w) {
          std::uint64_t low = w & (~w + 1);
          if (table_[x ^ low] != cnt - 1) {
            minimal = false;
            break;
          }
          w ^= low;
        }
        if (minimal) out.push_back(SmallSet::from_index(x));
      }
      circuits_ = std::move(out);
      circuits_ready_ = true;
    });
    if (!circuits_ready_) throw CapacityError(table_error_);
    return circuits_;
  }

 private:
  int n_;
  std::string label_;
  bool memoize_;
  mutable std::atomic<int> full_rank_{-1};
  mutable std::once_flag table_once_;
  mutable std::vector<std::uint8_t> table_;
  mutable std::atomic<bool> table_ready_{false};
  mutable std::string table_error_;
  mutable std::once_flag circuits_once_;
  mutable std::vector<SmallSet> circuits_;
  mutable bool circuits_ready_ = false;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<SmallSet, int> memo_;
};

namespace {

class UniformCore : public MatroidCore {
 public:
  UniformCore(int r, int n, std::string label) : MatroidCore(n, std::move(label)), r_(r) {}
  int rank_of(const SmallSet& x) const override { return std::min(x.count(), r_); }

 private:
  int r_;
};

class GraphicCore : public MatroidCore {
 public:
  GraphicCore(int vcount, std::vector<std::pair<int, int>> edges)
      : MatroidCore(static_cast<int>(edges.size()),
                    "graphic(v=" + std::to_string(vcount) + ",e=" + std::to_string(edges.size()) + ")"),
        vcount_(vcount),
        edges_(std::move(edges)) {}

  int rank_of(const SmallSet& x) const override {
    // Rank of an edge set = number of merges in a union-find pass.
    int parent[64];
    for (int v = 0; v < vcount_; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    int merges = 0;
    x.for_each([&](int e) {
      int a = find(edges_[e].first);
      int b = find(edges_[e].second);
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    });
    return merges;
  }

 private:
  int vcount_;
  std::vector<std::pair<int, int>> edges_;
};

class LinearCore : public MatroidCore {
 public:
  explicit LinearCore(FieldMatrix a, std::string label)
      : MatroidCore(a.cols(), std::move(label)), a_(std::move(a)) {}
  int rank_of(const SmallSet& x) const override { return matrix_rank(a_, x); }
  const FieldMatrix& matrix() const { return a_; }

 private:
  FieldMatrix a_;
};

class BasisCore : public MatroidCore {
 public:
  BasisCore(int n, std::vector<SmallSet> bases)
      : MatroidCore(n, "bases(" + std::to_string(bases.size()) + ")"), bases_(std::move(bases)) {}
  int rank_of(const SmallSet& x) const override {
    int best = 0;
    for (const auto& b : bases_) best = std::max(best, (b & x).count());
    return best;
  }

 private:
  std::vector<SmallSet> bases_;
};

class TableCore : public MatroidCore {
 public:
  TableCore(int n, std::vector<std::uint8_t> table, std::string label)
      : MatroidCore(n, std::move(label)), t_(std::move(table)) {
    if (t_.size() != (std::size_t{1} << n)) {
      throw ParseError("rank table size must be 2^n");
    }
  }
  int rank_of(const SmallSet& x) const override { return t_[x.index32()]; }

 private:
  std::vector<std::uint8_t> t_;
};

class FunctionCore : public MatroidCore {
 public:
  FunctionCore(int n, std::function<int(const SmallSet&)> fn, std::string label, bool memoize)
      : MatroidCore(n, std::move(label), memoize), fn_(std::move(fn)) {}
  int rank_of(const SmallSet& x) const override { return fn_(x); }

 private:
  std::function<int(const SmallSet&)> fn_;
};

class DualCore : public MatroidCore {
 public:
  explicit DualCore(Matroid base)
      : MatroidCore(base.size(), "dual(" + base.label() + ")"), base_(std::move(base)) {}
  int rank_of(const SmallSet& x) const override {
    return x.count() + base_.rank(base_.ground() - x) - base_.rank();
  }

 private:
  Matroid base_;
};

class TruncationCore : public MatroidCore {
 public:
  TruncationCore(Matroid base, int t)
      : MatroidCore(base.size(), "trunc(" + base.label() + "," + std::to_string(t) + ")"),
        base_(std::move(base)),
        cap_(base_.rank() - t) {}
  int rank_of(const SmallSet& x) const override { return std::min(base_.rank(x), cap_); }

 private:
  Matroid base_;
  int cap_;
};

class RestrictionCore : public MatroidCore {
 public:
  RestrictionCore(Matroid base, std::vector<int> elems)
      : MatroidCore(static_cast<int>(elems.size()), "restrict(" + base.label() + ")"),
        base_(std::move(base)),
        elems_(std::move(elems)) {}
  int rank_of(const SmallSet& x) const override {
    SmallSet expanded;
    x.for_each([&](int i) { expanded.set(elems_[i]); });
    return base_.rank(expanded);
  }

 private:
  Matroid base_;
  std::vector<int> elems_;
};

}  // namespace
}  // namespace detail

Matroid::Matroid() : core_(std::make_shared<const detail::UniformCore>(0, 0, "empty")) {}

Matroid::Matroid(std::shared_ptr<const detail::MatroidCore> core) : core_(std::move(core)) {}

int Matroid::size() const { return core_->size(); }
SmallSet Matroid::ground() const { return core_->ground(); }

int Matroid::rank(const SmallSet& x) const {
  if (!x.subset_of(core_->ground())) {
    throw std::out_of_range("subset contains an element outside the ground set");
  }
  return core_->rank(x);
}

int Matroid::rank() const { return core_->full_rank(); }

bool Matroid::is_circuit(const SmallSet& x) const {
  int cnt = x.count();
  if (cnt == 0 || rank(x) != cnt - 1) return false;
  bool minimal = true;
  x.for_each([&](int e) {
    if (minimal && core_->rank(x.without(e)) != cnt - 1) minimal = false;
  });
  return minimal;
}

bool Matroid::is_coloop(int e) const {
  return core_->rank(ground().without(e)) == rank() - 1;
}

SmallSet Matroid::closure(const SmallSet& x) const {
  int rx = rank(x);
  SmallSet out = x;
  ground().for_each([&](int e) {
    if (!x.test(e) && core_->rank(x.with(e)) == rx) out.set(e);
  });
  return out;
}

const Matroid& Matroid::materialize() const {
  core_->ensure_table();
  return *this;
}

bool Matroid::has_table() const { return core_->has_table(); }

const std::vector<std::uint8_t>& Matroid::table() const {
  core_->ensure_table();
  return core_->table();
}

const std::vector<SmallSet>& Matroid::circuits() const { return core_->circuits(); }

const std::string& Matroid::label() const { return core_->label(); }

// ---- constructors ----------------------------------------------------------

Matroid uniform_matroid(int r, int n) {
  if (n < 0 || r < 0 || r > n) {
    throw ParseError("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));
  }
  return Matroid(std::make_shared<const detail::UniformCore>(
      r, n, "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")"));
}

Matroid free_matroid(int n) {
  if (n < 0) throw ParseError("free matroid needs n >= 0");
  return Matroid(std::make_shared<const detail::UniformCore>(n, n, "free(" + std::to_string(n) + ")"));
}

Matroid rank_zero_matroid(int n) {
  if (n < 0) throw ParseError("rank-zero matroid needs n >= 0");
  return Matroid(std::make_shared<const detail::UniformCore>(0, n, "zero(" + std::to_string(n) + ")"));
}

Matroid graphic_matroid(int vcount, std::vector<std::pair<int, int>> edges) {
  if (vcount < 0 || vcount > 64) throw CapacityError("graphic matroids support up to 64 vertices");
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vcount || v < 0 || v >= vcount) {
      throw ParseError("graphic edge endpoint out of range");
    }
  }
  return Matroid(std::make_shared<const detail::GraphicCore>(vcount, std::move(edges)));
}

Matroid linear_matroid(FieldMatrix a) {
  std::string label = "linear(" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      ",q=" + std::to_string(a.field().q()) + ")";
  return Matroid(std::make_shared<const detail::LinearCore>(std::move(a), std::move(label)));
}

Matroid basis_matroid(int n, std::vector<SmallSet> bases) {
  if (bases.empty()) throw ValidationError("basis list is empty");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  int r = bases.front().count();
  SmallSet ground = SmallSet::first_n(n);
  std::set<SmallSet> in_family(bases.begin(), bases.end());
  for (const auto& b : bases) {
    if (!b.subset_of(ground)) throw ValidationError("basis " + b.to_string() + " not inside ground set");
    if (b.count() != r) {
      throw ValidationError("bases have unequal sizes: " + bases.front().to_string() + " vs " +
                            b.to_string());
    }
  }
  // Basis exchange: for all A, B and a in A-B there is b in B-A with A-a+b a basis.
  for (const auto& a : bases) {
    for (const auto& b : bases) {
      bool ok_pair = true;
      (a - b).for_each([&](int ea) {
        if (!ok_pair) return;
        bool found = false;
        (b - a).for_each([&](int eb) {
          if (!found && in_family.count(a.without(ea).with(eb))) found = true;
        });
        if (!found) ok_pair = false;
      });
      if (!ok_pair) {
        throw ValidationError("basis exchange fails for pair " + a.to_string() + ", " + b.to_string());
      }
    }
  }
  return Matroid(std::make_shared<const detail::BasisCore>(n, std::move(bases)));
}

Matroid table_matroid(int n, std::vector<std::uint8_t> table, std::string label) {
  return Matroid(std::make_shared<const detail::TableCore>(n, std::move(table), std::move(label)));
}

Matroid oracle_matroid(int n, std::function<int(const SmallSet&)> fn, std::string label,
                       bool memoize) {
  return Matroid(std::make_shared<const detail::FunctionCore>(n, std::move(fn), std::move(label), memoize));
}

ProjectiveGeometry projective_geometry(int dim, const Field& f) {
  FieldMatrix pts = projective_points(dim + 1, f);
  std::string label = "PG(" + std::to_string(dim) + "," + std::to_string(f.q()) + ")";
  Matroid m(std::make_shared<const detail::LinearCore>(pts, label));
  return ProjectiveGeometry{std::move(pts), std::move(m)};
}

Matroid dual(const Matroid& m) { return Matroid(std::make_shared<const detail::DualCore>(m)); }

Matroid truncation(const Matroid& m, int t) {
  if (t < 0 || t > m.rank()) {
    throw ParseError("truncation amount must satisfy 0 <= t <= r(M), got " + std::to_string(t));
  }
  if (t == 0) return m;
  return Matroid(std::make_shared<const detail::TruncationCore>(m, t));
}

Matroid restriction(const Matroid& m, const SmallSet& x) {
  if (!x.subset_of(m.ground())) throw std::out_of_range("restriction set outside ground");
  return Matroid(std::make_shared<const detail::RestrictionCore>(m, x.elements()));
}

// ---- circuit family --------------------------------------------------------

CircuitFamily circuit_family(const Matroid& m) {
  return CircuitFamily{m, m.circuits()};
}

int CircuitFamily::index_of(const SmallSet& c) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), c);
  if (it == sets.end() || !(*it == c)) return -1;
  return static_cast<int>(it - sets.begin());
}

SmallSet CircuitFamily::circuits_within(const SmallSet& x) const {
  SmallSet out;
  for (int i = 0; i < size(); ++i) {
    if (sets[i].subset_of(x)) out.set(i);
  }
  return out;
}

// ---- axioms ----------------------------------------------------------------

namespace {

Verdict axioms_on_table(const Matroid& m) {
  const auto& t = m.table();
  int n = m.size();
  std::uint64_t total = std::uint64_t{1} << n;
  if (t[0] != 0) return {false, "normalization fails: r({}) = " + std::to_string(t[0])};
  for (std::uint64_t x = 0; x < total; ++x) {
    for (int e = 0; e < n; ++e) {
      if ((x >> e) & 1) continue;
      int r0 = t[x], r1 = t[x | (1ULL << e)];
      if (r1 < r0 || r1 > r0 + 1) {
        return {false, "unit increase fails at X=" + SmallSet::from_index(x).to_string() +
                           ", e=" + std::to_string(e)};
      }
    }
  }
  // Submodularity over all pairs, in parallel; report the canonically least
  // witness so the verdict is schedule-independent.
  struct Witness {
    std::uint64_t x = ~0ULL, y = ~0ULL;
    bool found = false;
  };
  int workers = worker_count();
  std::vector<Witness> per_chunk(std::max(1, workers));
  std::atomic<int> chunk_id{0};
  parallel_chunks(static_cast<std::int64_t>(total), workers, [&](std::int64_t lo, std::int64_t hi) {
    Witness w;
    for (std::int64_t x = lo; x < hi && !w.found; ++x) {
      for (std::uint64_t y = 0; y < total; ++y) {
        std::uint64_t u = static_cast<std::uint64_t>(x) | y;
        std::uint64_t i = static_cast<std::uint64_t>(x) & y;
        if (t[u] + t[i] > t[x] + t[y]) {
          w = {static_cast<std::uint64_t>(x), y, true};
          break;
        }
      }
    }
    per_chunk[chunk_id.fetch_add(1)] = w;
  });
  Witness best;
  for (const auto& w : per_chunk) {
    if (!w.found) continue;
    if (!best.found || w.x < best.x || (w.x == best.x && w.y < best.y)) best = w;
  }
  if (best.found) {
    return {false, "submodularity fails at X=" + SmallSet::from_index(best.x).to_string() +
                       ", Y=" + SmallSet::from_index(best.y).to_string()};
  }
  return {};
}

}  // namespace

Verdict check_rank_axioms(const Matroid& m, std::uint64_t seed) {
  m.materialize();
  if (m.size() <= 12) return axioms_on_table(m);
  // Above the exhaustive regime: full normalization and unit-increase scans
  // stay cheap enough, submodularity is sampled.
  const auto& t = m.table();
  int n = m.size();
  std::uint64_t total = std::uint64_t{1} << n;
  if (t[0] != 0) return {false, "normalization fails: r({}) = " + std::to_string(t[0])};
  for (std::uint64_t x = 0; x < total; ++x) {
    for (int e = 0; e < n; ++e) {
      if ((x >> e) & 1) continue;
      int r0 = t[x], r1 = t[x | (1ULL << e)];
      if (r1 < r0 || r1 > r0 + 1) {
        return {false, "unit increase fails at X=" + SmallSet::from_index(x).to_string() +
                           ", e=" + std::to_string(e)};
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 300000; ++s) {
    std::uint64_t x = rng() & (total - 1), y = rng() & (total - 1);
    if (t[x | y] + t[x & y] > t[x] + t[y]) {
      return {false, "submodularity fails at X=" + SmallSet::from_index(x).to_string() +
                         ", Y=" + SmallSet::from_index(y).to_string()};
    }
  }
  return {};
}

Verdict check_rank_axioms_sampled(const Matroid& m, int samples, std::uint64_t seed) {
  int n = m.size();
  if (m.rank(SmallSet{}) != 0) return {false, "normalization fails at the empty set"};
  std::mt19937_64 rng(seed);
  auto random_set = [&] {
    SmallSet s;
    for (int e = 0; e < n; ++e) {
      if (rng() & 1) s.set(e);
    }
    return s;
  };
  for (int i = 0; i < samples; ++i) {
    SmallSet x = random_set();
    int e = static_cast<int>(rng() % std::max(1, n));
    SmallSet xe = x.with(e);
    int r0 = m.rank(x), r1 = m.rank(xe);
    if (x.test(e)) {
      if (r0 != r1) return {false, "rank not well defined at " + x.to_string()};
      continue;
    }
    if (r1 < r0 || r1 > r0 + 1) {
      return {false, "unit increase fails at X=" + x.to_string() + ", e=" + std::to_string(e)};
    }
    SmallSet y = random_set();
    if (m.rank(x | y) + m.rank(x & y) > r0 + m.rank(y)) {
      return {false, "submodularity fails at X=" + x.to_string() + ", Y=" + y.to_string()};
    }
  }
  return {};
}

// ---- quotient test ---------------------------------------------------------

Verdict is_quotient(const Matroid& mq, const Matroid& k) {
  if (mq.size() != k.size()) {
    throw ValidationError("quotient test needs matching ground sets (" +
                          std::to_string(mq.size()) + " vs " + std::to_string(k.size()) + ")");
  }
  mq.materialize();
  k.materialize();
  const auto& tq = mq.table();
  const auto& tk = k.table();
  int n = mq.size();
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    for (int e = 0; e < n; ++e) {
      if ((x >> e) & 1) continue;
      std::uint64_t xe = x | (1ULL << e);
      // e in cl_K(X) must imply e in cl_Mq(X).
      if (tk[xe] == tk[x] && tq[xe] != tq[x]) {
        return {false, "cl_K(" + SmallSet::from_index(x).to_string() + ") contains " +
                           std::to_string(e) + " but the quotient closure does not"};
      }
    }
  }
  return {};
}

// ---- isomorphism -----------------------------------------------------------

namespace {

struct ElementSignature {
  int singleton_rank;
  bool coloop;
  std::vector<int> circuit_sizes;  // sorted sizes of circuits through e

  bool operator==(const ElementSignature& o) const {
    return singleton_rank == o.singleton_rank && coloop == o.coloop &&
           circuit_sizes == o.circuit_sizes;
  }
  bool operator<(const ElementSignature& o) const {
    if (singleton_rank != o.singleton_rank) return singleton_rank < o.singleton_rank;
    if (coloop != o.coloop) return coloop < o.coloop;
    return circuit_sizes < o.circuit_sizes;
  }
};

std::vector<ElementSignature> signatures(const Matroid& m) {
  std::vector<ElementSignature> sig(m.size());
  for (int e = 0; e < m.size(); ++e) {
    sig[e].singleton_rank = m.rank(SmallSet::single(e));
    sig[e].coloop = m.is_coloop(e);
  }
  for (const auto& c : m.circuits()) {
    int sz = c.count();
    c.for_each([&](int e) { sig[e].circuit_sizes.push_back(sz); });
  }
  for (auto& s : sig) std::sort(s.circuit_sizes.begin(), s.circuit_sizes.end());
  return sig;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return std::nullopt;
  int n = a.size();
  if (n > caps::max_iso_ground()) {
    throw CapacityError("isomorphism search limited to ground size " +
                        std::to_string(caps::max_iso_ground()));
  }
  if (a.rank() != b.rank()) return std::nullopt;
  a.materialize();
  b.materialize();
  if (a.circuits().size() != b.circuits().size()) return std::nullopt;
  {
    std::vector<int> ca, cb;
    for (const auto& c : a.circuits()) ca.push_back(c.count());
    for (const auto& c : b.circuits()) cb.push_back(c.count());
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  auto sig_a = signatures(a), sig_b = signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) return std::nullopt;
  }

  // Assign elements of a in a fixed order, rarest signature first; candidates
  // in b must carry the same signature.  After each assignment check rank
  // equality on every subset of the assigned prefix that contains the new
  // element.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (!(sig_a[x] == sig_a[y])) return sig_a[x] < sig_a[y];
    return x < y;
  });

  const auto& ta = a.table();
  const auto& tb = b.table();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);

  std::function<bool(int)> assign = [&](int depth) -> bool {
    if (depth == n) return true;
    int ea = order[depth];
    for (int eb = 0; eb < n; ++eb) {
      if (used[eb] || !(sig_a[ea] == sig_b[eb])) continue;
      bool ok = true;
      std::uint64_t prefix_count = std::uint64_t{1} << depth;
      for (std::uint64_t mask = 0; mask < prefix_count && ok; ++mask) {
        std::uint64_t xa = 1ULL << ea;
        std::uint64_t xb = 1ULL << eb;
        for (int i = 0; i < depth; ++i) {
          if ((mask >> i) & 1) {
            xa |= 1ULL << order[i];
            xb |= 1ULL << perm[order[i]];
          }
        }
        if (ta[xa] != tb[xb]) ok = false;
      }
      if (!ok) continue;
      perm[ea] = eb;
      used[eb] = true;
      if (assign(depth + 1)) return true;
      perm[ea] = -1;
      used[eb] = false;
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;
  return perm;
}

std::uint64_t rank_table_hash(const Matroid& m) {
  const auto& t = m.table();
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint8_t b : t) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace liftforge
