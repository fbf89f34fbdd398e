#pragma once

// Named classes in the counting realization: special linear groups, the
// Bruhat-type cells Z_w and the fibration factor of the Plücker quotient.

#include <vector>

#include "motzeta/laurent.hpp"

namespace motzeta {

/// A bijection of {1..r}, stored as the image sequence w(1), ..., w(r).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int r);

  int size() const { return static_cast<int>(images_.size()); }
  /// w(i) for 1 <= i <= r.
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  /// All r! permutations in lexicographic order of their image sequences.
  static std::vector<Permutation> all(int r);

 private:
  std::vector<int> images_;
};

/// [SL_r] = L^{r^2-1} prod_{2<=i<=r} (1 - L^{-i}).
LaurentMotive sl_class(int r);

/// m_i = #{1 <= k < w(i) : k != w(j) for all j < i}, returned for i = 1..r.
std::vector<int> z_w_defects(const Permutation& w);

/// [Z_w] = (L-1)^{r-1} L^{sum_i (r-1-m_i)}.
LaurentMotive z_w_class(const Permutation& w);

/// Checks sum_{w in S_r} [Z_w] == [SL_r] exactly.
bool zw_sum_identity(int r);

/// L^{n(r^2-1) + k((m-r)r+1)} * sum_{|e|=k} prod_{1<=i<=r} L^{-(m+1-i)e_i}.
LaurentMotive fibration_factor(int m, int r, int n, int k);

/// All e in N^r with |e| = k.
std::vector<std::vector<int>> compositions(int k, int r);

}  // namespace motzeta
