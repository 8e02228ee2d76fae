#include "liftforge/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "liftforge/errors.hpp"

namespace liftforge {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Polynomials over GF(p) as little-endian coefficient vectors.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  // m is monic of degree deg_m given by m.size()-1.
  int deg_m = static_cast<int>(m.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= deg_m; --d) {
    int c = a[d] % p;
    if (c == 0) continue;
    for (int i = 0; i <= deg_m; ++i) {
      int& t = a[d - deg_m + i];
      t = ((t - c * m[i]) % p + p) % p;
    }
  }
  a.resize(deg_m);
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return out;
}

bool poly_is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& monic, int p) {
  int deg = static_cast<int>(monic.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> div(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[d] = 1;
      if (poly_is_zero(poly_mod(monic, div, p))) return false;
    }
  }
  return true;
}

std::vector<int> least_irreducible(int p, int k) {
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    // Lexicographic order on (c_0, ..., c_{k-1}): c_0 varies slowest, so it
    // comes from the top of the counter.
    std::vector<int> m(k + 1, 0);
    long long c = code;
    for (int i = k - 1; i >= 0; --i) {
      m[i] = static_cast<int>(c % p);
      c /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Field Field::gf(int p, int k) {
  if (!is_prime(p)) throw ParseError("field characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw ParseError("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 256) {
    throw CapacityError("GF(" + std::to_string(p) + "^" + std::to_string(k) +
                        ") exceeds the supported order 256");
  }
  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<int>(q);
  std::vector<int> mod = least_irreducible(p, k);
  f.modulus_.assign(mod.begin(), mod.end() - 1);

  f.add_.resize(f.q_ * f.q_);
  f.mul_.resize(f.q_ * f.q_);
  f.neg_.resize(f.q_);
  f.inv_.assign(f.q_, 0);
  auto digits = [&](int a) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto undigits = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  };
  for (int a = 0; a < f.q_; ++a) {
    auto da = digits(a);
    std::vector<int> dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    f.neg_[a] = undigits(dn);
    for (int b = 0; b < f.q_; ++b) {
      auto db = digits(b);
      std::vector<int> ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      f.add_[a * f.q_ + b] = undigits(ds);
      auto prod = poly_mod(poly_mul(da, db, p), mod, p);
      prod.resize(k);
      f.mul_[a * f.q_ + b] = undigits(prod);
    }
  }
  for (int a = 1; a < f.q_; ++a) {
    for (int b = 1; b < f.q_; ++b) {
      if (f.mul_[a * f.q_ + b] == 1) {
        f.inv_[a] = b;
        break;
      }
    }
    if (f.inv_[a] == 0) throw std::logic_error("modulus not irreducible: no inverse");
  }
  return f;
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

int Field::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<int> Field::coeffs(int a) const {
  std::vector<int> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

int Field::from_coeffs(const std::vector<int>& d) const {
  int a = 0;
  for (int i = k_ - 1; i >= 0; --i) a = a * p_ + (d[i] % p_ + p_) % p_;
  return a;
}

FieldMatrix::FieldMatrix(Field f, int rows, int cols, std::vector<int> data)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
  if (static_cast<int>(a_.size()) != rows * cols) {
    throw ParseError("matrix data length does not match rows*cols");
  }
  for (int& v : a_) {
    if (v < 0 || v >= field_.q()) {
      throw ParseError("matrix entry " + std::to_string(v) + " outside GF(" +
                       std::to_string(field_.q()) + ")");
    }
  }
}

std::vector<int> FieldMatrix::column(int c) const {
  std::vector<int> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

namespace {

// Row-reduces the submatrix of the selected columns in place; returns rank.
int eliminate(const Field& f, std::vector<std::vector<int>>& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    int piv_inv = f.inv(m[rank][c]);
    for (int j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], piv_inv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      int factor = m[r][c];
      for (int j = c; j < cols; ++j) {
        m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank(const FieldMatrix& a, const SmallSet& cols) {
  auto idx = cols.elements();
  for (int c : idx) {
    if (c < 0 || c >= a.cols()) throw std::out_of_range("column index out of range");
  }
  std::vector<std::vector<int>> m(a.rows(), std::vector<int>(idx.size()));
  for (int r = 0; r < a.rows(); ++r) {
    for (size_t j = 0; j < idx.size(); ++j) m[r][j] = a.at(r, idx[j]);
  }
  return eliminate(a.field(), m);
}

int matrix_rank(const FieldMatrix& a) {
  return matrix_rank(a, SmallSet::first_n(a.cols()));
}

std::optional<std::vector<int>> nullspace_vector(const FieldMatrix& a,
                                                 const SmallSet& support) {
  const Field& f = a.field();
  auto idx = support.elements();
  if (idx.empty()) return std::nullopt;
  for (int c : idx) {
    if (c < 0 || c >= a.cols()) throw std::out_of_range("column index out of range");
  }
  int s = static_cast<int>(idx.size());
  // RREF of the selected columns, then read off a kernel basis.
  std::vector<std::vector<int>> m(a.rows(), std::vector<int>(s));
  for (int r = 0; r < a.rows(); ++r) {
    for (int j = 0; j < s; ++j) m[r][j] = a.at(r, idx[j]);
  }
  int rank = eliminate(f, m);
  int dim = s - rank;
  if (dim == 0) return std::nullopt;

  std::vector<int> pivot_col_of_row(rank, -1);
  std::vector<bool> is_pivot(s, false);
  {
    int r = 0;
    for (int c = 0; c < s && r < rank; ++c) {
      if (m[r][c] != 0) {
        pivot_col_of_row[r] = c;
        is_pivot[c] = true;
        ++r;
      }
    }
  }
  std::vector<std::vector<int>> basis;
  for (int c = 0; c < s; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(s, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r) {
      v[pivot_col_of_row[r]] = f.neg(m[r][c]);
    }
    basis.push_back(std::move(v));
  }

  // Search the kernel for a vector with no zero entry.  The kernel has q^dim
  // elements; cap the search to keep degenerate inputs from exploding.  For
  // the circuit case dim == 1 and the basis vector itself qualifies.
  long long combos = 1;
  for (int i = 0; i < dim; ++i) {
    combos *= f.q();
    if (combos > 1 << 20) {
      throw CapacityError("nullspace support search space too large (kernel dimension " +
                          std::to_string(dim) + ")");
    }
  }
  for (long long code = 1; code < combos; ++code) {
    std::vector<int> v(s, 0);
    long long c = code;
    for (int i = 0; i < dim; ++i) {
      int coef = static_cast<int>(c % f.q());
      c /= f.q();
      if (coef == 0) continue;
      for (int j = 0; j < s; ++j) v[j] = f.add(v[j], f.mul(coef, basis[i][j]));
    }
    bool full = true;
    for (int j = 0; j < s; ++j) {
      if (v[j] == 0) {
        full = false;
        break;
      }
    }
    if (!full) continue;
    // Scale so the lowest-index nonzero entry (in full coordinates) is 1.
    int scale = f.inv(v[0]);
    std::vector<int> out(a.cols(), 0);
    for (int j = 0; j < s; ++j) out[idx[j]] = f.mul(v[j], scale);
    // Re-verify A*out = 0 and the exact-support condition.
    for (int r = 0; r < a.rows(); ++r) {
      int acc = 0;
      for (int c2 = 0; c2 < a.cols(); ++c2) acc = f.add(acc, f.mul(a.at(r, c2), out[c2]));
      if (acc != 0) throw std::logic_error("nullspace vector verification failed");
    }
    return out;
  }
  return std::nullopt;
}

FieldMatrix projective_points(int m, const Field& f) {
  if (m < 1) throw ParseError("projective geometry needs dimension >= 1");
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= f.q();
    if (total > (1 << 22)) throw CapacityError("projective space too large");
  }
  std::vector<std::vector<int>> pts;
  std::vector<int> v(m, 0);
  // Lexicographic enumeration with coordinate 0 most significant; a vector
  // is canonical when its first nonzero coordinate equals 1.
  for (long long code = 1; code < total; ++code) {
    long long c = code;
    for (int i = m - 1; i >= 0; --i) {
      v[i] = static_cast<int>(c % f.q());
      c /= f.q();
    }
    int first = -1;
    for (int i = 0; i < m; ++i) {
      if (v[i] != 0) {
        first = i;
        break;
      }
    }
    if (first >= 0 && v[first] == 1) pts.push_back(v);
  }
  FieldMatrix out(f, m, static_cast<int>(pts.size()));
  for (size_t c = 0; c < pts.size(); ++c) {
    for (int r = 0; r < m; ++r) out.at(r, static_cast<int>(c)) = pts[c][r];
  }
  return out;
}

int projective_point_index(const FieldMatrix& points, const std::vector<int>& v) {
  const Field& f = points.field();
  if (static_cast<int>(v.size()) != points.rows()) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  int first = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      first = static_cast<int>(i);
      break;
    }
  }
  if (first < 0) throw std::invalid_argument("zero vector has no projective point");
  int scale = f.inv(v[first]);
  std::vector<int> canon(v.size());
  for (size_t i = 0; i < v.size(); ++i) canon[i] = f.mul(v[i], scale);
  for (int c = 0; c < points.cols(); ++c) {
    bool same = true;
    for (int r = 0; r < points.rows(); ++r) {
      if (points.at(r, c) != canon[r]) {
        same = false;
        break;
      }
    }
    if (same) return c;
  }
  throw std::logic_error("canonical point not found in point list");
}

}  // namespace liftforge
