#pragma once

#include <string>
#include <vector>

namespace liftforge {

/// A finite group, either an explicit direct sum of cyclic groups (elements
/// are coordinate tuples, stored as mixed-radix indices with coordinate 0 the
/// fastest digit) or an arbitrary group given by a Cayley table.  Elements
/// are indices 0..order-1 and the identity is always index 0.
class FiniteGroup {
 public:
  /// Z_{d1} + Z_{d2} + ... ; every d must be >= 2.  An empty list gives the
  /// trivial group.
  static FiniteGroup abelian(std::vector<int> cyclic_orders);
  /// Validates the table: Latin square, identity at index 0, inverses,
  /// associativity (exhaustive; order <= 24).
  static FiniteGroup cayley(std::vector<std::vector<int>> table,
                            std::string name = "cayley");
  /// The symmetric group on [n], n <= 4, as a Cayley table.  Permutations are
  /// listed in lexicographic order, so the identity permutation is index 0.
  static FiniteGroup symmetric(int n);
  /// "Z2", "Z2xZ4", "trivial", "S3".
  static FiniteGroup named(const std::string& name);

  int order() const { return order_; }
  int identity() const { return 0; }
  int compose(int a, int b) const;
  int inverse(int a) const;
  /// Least t >= 1 with a^t = identity.
  int element_order(int a) const;
  bool is_abelian() const;

  /// Closure of A together with the identity under compose and inverse,
  /// returned sorted.
  std::vector<int> generated_subgroup(const std::vector<int>& a) const;
  bool is_subgroup(const std::vector<int>& elems) const;

  const std::vector<int>& cyclic_orders() const { return orders_; }
  bool is_abelian_presentation() const { return !orders_.empty() || order_ == 1; }
  std::vector<int> coords(int a) const;            // abelian presentation only
  int from_coords(const std::vector<int>&) const;  // abelian presentation only

  const std::string& name() const { return name_; }
  std::string element_name(int a) const;

 private:
  FiniteGroup() = default;
  int order_ = 1;
  std::vector<int> orders_;               // empty for Cayley-table groups
  std::vector<std::vector<int>> table_;   // empty for abelian presentation
  std::vector<int> inverse_;
  std::string name_ = "trivial";
};

}  // namespace liftforge
