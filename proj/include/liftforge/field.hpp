#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "liftforge/bitset.hpp"

namespace liftforge {

/// GF(p^k) for q = p^k <= 256.  Elements are integers 0..q-1 encoding the
/// coefficient vector (c_0, c_1, ..., c_{k-1}) of a residue polynomial in
/// base p, little-endian: e = c_0 + c_1*p + ... .  The modulus is the
/// lexicographically least monic irreducible polynomial of degree k over
/// GF(p), ordered by (c_0, ..., c_{k-1}); the constructions here are
/// invariant under the choice of field isomorphism, so any fixed modulus
/// works and this one is deterministic.
class Field {
 public:
  static Field gf(int p, int k = 1);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Non-leading coefficients (c_0..c_{k-1}) of the modulus.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // throws on zero
  int pow(int a, long long e) const;

  std::vector<int> coeffs(int a) const;       // base-p digits, length k
  int from_coeffs(const std::vector<int>&) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  Field() = default;
  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

/// Dense matrix over a finite field, row-major.
class FieldMatrix {
 public:
  FieldMatrix(Field f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  FieldMatrix(Field f, int rows, int cols, std::vector<int> data);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return a_[r * cols_ + c]; }
  int& at(int r, int c) { return a_[r * cols_ + c]; }
  std::vector<int> column(int c) const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<int> a_;
};

/// Rank of the selected columns, by row reduction.
int matrix_rank(const FieldMatrix& a, const SmallSet& cols);
int matrix_rank(const FieldMatrix& a);

/// A kernel vector of A supported exactly on `support` (nonzero there, zero
/// elsewhere), scaled so the lowest-index nonzero entry is 1; nullopt when
/// no such vector exists.  When `support` is a circuit of the column matroid
/// the vector exists and is unique up to scaling.
std::optional<std::vector<int>> nullspace_vector(const FieldMatrix& a,
                                                 const SmallSet& support);

/// The projective geometry PG(m-1, q): one column per 1-dimensional subspace
/// of F_q^m, each scaled so the lowest-index nonzero coordinate is 1, listed
/// in lexicographic order of the coordinate tuple (index 0 most significant).
FieldMatrix projective_points(int m, const Field& f);

/// Index of a nonzero vector's projective point in the projective_points
/// column order.  Throws on the zero vector.
int projective_point_index(const FieldMatrix& points, const std::vector<int>& v);

}  // namespace liftforge
