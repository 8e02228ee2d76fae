#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace liftforge {

/// A subset of a ground set, packed into a fixed number of 64-bit words.
///
/// Ground-set subsets never exceed the full-enumeration capacity (24), but
/// circuit- and hyperplane-index sets can be much larger (a fully labeled
/// K_3 over a group of order six has 261 cycles), so the inline capacity is
/// generous.  Value semantics, no allocation.
class SmallSet {
 public:
  static constexpr int kWords = 5;
  static constexpr int kMaxElements = 64 * kWords;

  constexpr SmallSet() = default;

  static SmallSet single(int e) {
    SmallSet s;
    s.set(e);
    return s;
  }

  /// The set {0, 1, ..., n-1}.
  static SmallSet first_n(int n) {
    SmallSet s;
    for (int w = 0; n > 0; ++w, n -= 64) {
      s.w_[w] = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
    }
    return s;
  }

  static SmallSet of(std::initializer_list<int> elems) {
    SmallSet s;
    for (int e : elems) s.set(e);
    return s;
  }

  /// Interprets the low word of an integer as a subset of {0..31}.
  static SmallSet from_index(std::uint64_t bits) {
    SmallSet s;
    s.w_[0] = bits;
    return s;
  }

  bool test(int e) const { return (w_[e >> 6] >> (e & 63)) & 1ULL; }
  void set(int e) { w_[e >> 6] |= 1ULL << (e & 63); }
  void reset(int e) { w_[e >> 6] &= ~(1ULL << (e & 63)); }

  SmallSet with(int e) const {
    SmallSet s = *this;
    s.set(e);
    return s;
  }
  SmallSet without(int e) const {
    SmallSet s = *this;
    s.reset(e);
    return s;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_) {
      if (w) return false;
    }
    return true;
  }

  bool subset_of(const SmallSet& o) const {
    for (int i = 0; i < kWords; ++i) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }

  bool intersects(const SmallSet& o) const {
    for (int i = 0; i < kWords; ++i) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }

  friend SmallSet operator|(SmallSet a, const SmallSet& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] |= b.w_[i];
    return a;
  }
  friend SmallSet operator&(SmallSet a, const SmallSet& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= b.w_[i];
    return a;
  }
  friend SmallSet operator-(SmallSet a, const SmallSet& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= ~b.w_[i];
    return a;
  }
  friend SmallSet operator^(SmallSet a, const SmallSet& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] ^= b.w_[i];
    return a;
  }
  SmallSet& operator|=(const SmallSet& b) {
    for (int i = 0; i < kWords; ++i) w_[i] |= b.w_[i];
    return *this;
  }
  SmallSet& operator&=(const SmallSet& b) {
    for (int i = 0; i < kWords; ++i) w_[i] &= b.w_[i];
    return *this;
  }

  bool operator==(const SmallSet& o) const { return w_ == o.w_; }
  bool operator!=(const SmallSet& o) const { return w_ != o.w_; }

  /// Orders sets as the integers their bit patterns encode; this is the
  /// canonical order used everywhere a set family is listed.
  bool operator<(const SmallSet& o) const {
    for (int i = kWords - 1; i >= 0; --i) {
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    }
    return false;
  }

  /// Least element, or -1 when empty.
  int lowest() const {
    for (int i = 0; i < kWords; ++i) {
      if (w_[i]) return 64 * i + __builtin_ctzll(w_[i]);
    }
    return -1;
  }

  template <typename Fn>
  void for_each(Fn fn) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        fn(64 * i + __builtin_ctzll(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  /// Low 32 bits; the table index for ground sets of size <= 24.
  std::uint32_t index32() const { return static_cast<std::uint32_t>(w_[0]); }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int e) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    });
    out += '}';
    return out;
  }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace liftforge

template <>
struct std::hash<liftforge::SmallSet> {
  std::size_t operator()(const liftforge::SmallSet& s) const { return s.hash(); }
};
