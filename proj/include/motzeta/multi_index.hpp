#pragma once

#include <compare>
#include <string>
#include <vector>

namespace motzeta {

/// Exponent vector of a monomial T_1^{n_1} ... T_l^{n_l}. Series shifts may
/// carry negative entries; coefficient indices never do.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}
  static MultiIndex zeros(int ell) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(ell), 0)); }
  static MultiIndex filled(int ell, int value) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(ell), value));
  }

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return entries[static_cast<std::size_t>(i)]; }

  int total() const {
    int t = 0;
    for (int v : entries) t += v;
    return t;
  }
  int max_entry() const {
    int m = entries.empty() ? 0 : entries.front();
    for (int v : entries) m = v > m ? v : m;
    return m;
  }
  bool is_zero() const {
    for (int v : entries)
      if (v != 0) return false;
    return true;
  }
  bool nonnegative() const {
    for (int v : entries)
      if (v < 0) return false;
    return true;
  }
  /// Componentwise <=.
  bool dominated_by(const MultiIndex& other) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i] > other.entries[i]) return false;
    return true;
  }
  int dot(const std::vector<int>& weights) const {
    int s = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) s += entries[i] * weights[i];
    return s;
  }

  MultiIndex& operator+=(const MultiIndex& o) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
    return *this;
  }
  MultiIndex& operator-=(const MultiIndex& o) {
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
    return *this;
  }
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
  friend MultiIndex operator*(int k, MultiIndex a) {
    for (int& v : a.entries) v *= k;
    return a;
  }
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  /// "[1,0,2]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries[i]);
    }
    return s + "]";
  }
};

/// All n in Z^ell with every entry >= lowest and |n| <= order, in
/// increasing total degree, lexicographic within a degree.
inline std::vector<MultiIndex> indices_up_to(int ell, int order, int lowest = 0) {
  std::vector<MultiIndex> out;
  if (ell < 1) return out;
  for (int total = lowest * ell; total <= order; ++total) {
    MultiIndex n = MultiIndex::filled(ell, lowest);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
      if (i == ell - 1) {
        n[i] = lowest + remaining;
        out.push_back(n);
        return;
      }
      for (int v = remaining; v >= 0; --v) {
        n[i] = lowest + v;
        self(self, i + 1, remaining - v);
      }
    };
    rec(rec, 0, total - lowest * ell);
  }
  return out;
}

}  // namespace motzeta
