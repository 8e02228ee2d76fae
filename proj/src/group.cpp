#include "liftforge/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liftforge/errors.hpp"

namespace liftforge {

FiniteGroup FiniteGroup::abelian(std::vector<int> cyclic_orders) {
  FiniteGroup g;
  for (int d : cyclic_orders) {
    if (d < 2) throw ValidationError("cyclic factor orders must be >= 2");
  }
  g.orders_ = std::move(cyclic_orders);
  g.order_ = 1;
  for (int d : g.orders_) {
    if (g.order_ > 4096 / d) throw CapacityError("abelian group order exceeds 4096");
    g.order_ *= d;
  }
  g.inverse_.resize(g.order_);
  for (int a = 0; a < g.order_; ++a) {
    auto c = g.coords(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (g.orders_[i] - c[i]) % g.orders_[i];
    g.inverse_[a] = g.from_coords(c);
  }
  if (g.orders_.empty()) {
    g.name_ = "trivial";
  } else {
    g.name_.clear();
    for (size_t i = 0; i < g.orders_.size(); ++i) {
      if (i) g.name_ += 'x';
      g.name_ += 'Z' + std::to_string(g.orders_[i]);
    }
  }
  return g;
}

FiniteGroup FiniteGroup::cayley(std::vector<std::vector<int>> table, std::string name) {
  FiniteGroup g;
  int m = static_cast<int>(table.size());
  if (m == 0) throw ValidationError("empty Cayley table");
  if (m > 24) throw CapacityError("Cayley groups limited to order 24");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m) throw ValidationError("Cayley table not square");
    for (int v : row) {
      if (v < 0 || v >= m) throw ValidationError("Cayley table entry out of range");
    }
  }
  // Latin square.
  for (int r = 0; r < m; ++r) {
    std::vector<bool> seen_row(m, false), seen_col(m, false);
    for (int c = 0; c < m; ++c) {
      if (seen_row[table[r][c]]) throw ValidationError("Cayley row " + std::to_string(r) + " repeats a value");
      seen_row[table[r][c]] = true;
      if (seen_col[table[c][r]]) throw ValidationError("Cayley column " + std::to_string(r) + " repeats a value");
      seen_col[table[c][r]] = true;
    }
  }
  // Identity must be element 0.
  for (int a = 0; a < m; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      throw ValidationError("Cayley identity must be index 0 (row/col 0 not identity at " +
                            std::to_string(a) + ")");
    }
  }
  // Associativity, exhaustive.
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw ValidationError("Cayley table not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  g.order_ = m;
  g.table_ = std::move(table);
  g.inverse_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (g.table_[a][b] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) throw ValidationError("element without inverse");
  }
  g.name_ = std::move(name);
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw CapacityError("symmetric groups supported for n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(q);
    }
  }
  return cayley(std::move(table), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  auto parse_int = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw ParseError("cannot parse group name '" + name + "'");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("cannot parse group name '" + name + "'");
    }
  };
  if (name == "trivial" || name == "Z1") return abelian({});
  if (name.size() >= 2 && name[0] == 'S') return symmetric(parse_int(name.substr(1)));
  // ZaxZbx... with each factor >= 2.
  std::vector<int> orders;
  size_t pos = 0;
  while (pos < name.size()) {
    if (name[pos] != 'Z') throw ParseError("cannot parse group name '" + name + "'");
    size_t end = name.find('x', pos);
    std::string num = name.substr(pos + 1, end == std::string::npos ? end : end - pos - 1);
    if (num.empty()) throw ParseError("cannot parse group name '" + name + "'");
    int d = parse_int(num);
    if (d < 2) throw ParseError("cannot parse group name '" + name + "' (factors must be >= 2)");
    orders.push_back(d);
    if (end != std::string::npos && end + 1 == name.size()) {
      throw ParseError("cannot parse group name '" + name + "' (trailing separator)");
    }
    pos = (end == std::string::npos) ? name.size() : end + 1;
  }
  return abelian(std::move(orders));
}

int FiniteGroup::compose(int a, int b) const {
  if (!table_.empty()) return table_[a][b];
  if (orders_.empty()) return 0;
  auto ca = coords(a), cb = coords(b);
  for (size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % orders_[i];
  return from_coords(ca);
}

int FiniteGroup::inverse(int a) const { return inverse_[a]; }

int FiniteGroup::element_order(int a) const {
  int t = 1;
  int x = a;
  while (x != 0) {
    x = compose(x, a);
    ++t;
  }
  return t;
}

bool FiniteGroup::is_abelian() const {
  if (table_.empty()) return true;
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& a) const {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  for (int e : a) {
    if (e < 0 || e >= order_) throw std::out_of_range("group element out of range");
    if (seen.insert(e).second) frontier.push_back(e);
  }
  // Breadth-first saturation under compose and inverse.
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      int xi = inverse(x);
      if (seen.insert(xi).second) next.push_back(xi);
      for (int y : std::vector<int>(seen.begin(), seen.end())) {
        int xy = compose(x, y);
        if (seen.insert(xy).second) next.push_back(xy);
        int yx = compose(y, x);
        if (seen.insert(yx).second) next.push_back(yx);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<int>(seen.begin(), seen.end());
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(0)) return false;
  for (int a : s) {
    if (!s.count(inverse(a))) return false;
    for (int b : s) {
      if (!s.count(compose(a, b))) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::coords(int a) const {
  std::vector<int> c(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    c[i] = a % orders_[i];
    a /= orders_[i];
  }
  return c;
}

int FiniteGroup::from_coords(const std::vector<int>& c) const {
  int a = 0;
  for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
    a = a * orders_[i] + ((c[i] % orders_[i]) + orders_[i]) % orders_[i];
  }
  return a;
}

std::string FiniteGroup::element_name(int a) const {
  if (!orders_.empty()) {
    auto c = coords(a);
    std::string out = "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    return out + ")";
  }
  if (order_ == 1) return "e";
  return a == 0 ? "e" : "g" + std::to_string(a);
}

}  // namespace liftforge
