#include "motzeta/motive_classes.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace motzeta {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int r = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > r || seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation images must be a rearrangement of 1.." + std::to_string(r));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> images(static_cast<std::size_t>(r));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int r) {
  std::vector<int> images(static_cast<std::size_t>(r));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

LaurentMotive sl_class(int r) {
  if (r < 1) throw DomainError("sl_class requires r >= 1");
  LaurentMotive out = LaurentMotive::L(r * r - 1);
  for (int i = 2; i <= r; ++i) out *= LaurentMotive(1) - LaurentMotive::L(-i);
  return out;
}

std::vector<int> z_w_defects(const Permutation& w) {
  const int r = w.size();
  std::vector<int> defects(static_cast<std::size_t>(r), 0);
  for (int i = 1; i <= r; ++i) {
    int count = 0;
    for (int k = 1; k < w(i); ++k) {
      bool taken = false;
      for (int j = 1; j < i; ++j) taken = taken || w(j) == k;
      if (!taken) ++count;
    }
    assert(count <= r - 1);
    defects[static_cast<std::size_t>(i - 1)] = count;
  }
  return defects;
}

LaurentMotive z_w_class(const Permutation& w) {
  const int r = w.size();
  int exponent = 0;
  for (int m : z_w_defects(w)) {
    if (m > r - 1) throw DomainError("z_w_class: defect exceeds r-1");
    exponent += r - 1 - m;
  }
  return (LaurentMotive::L() - LaurentMotive(1)).pow(static_cast<unsigned>(r - 1)) *
         LaurentMotive::L(exponent);
}

bool zw_sum_identity(int r) {
  LaurentMotive sum;
  for (const auto& w : Permutation::all(r)) sum += z_w_class(w);
  return sum == sl_class(r);
}

std::vector<std::vector<int>> compositions(int k, int r) {
  std::vector<std::vector<int>> out;
  if (r <= 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(r), 0);
  // Recursive fill: position i receives a value, the last takes the rest.
  auto fill = [&](auto&& self, int i, int remaining) -> void {
    if (i == r - 1) {
      e[static_cast<std::size_t>(i)] = remaining;
      out.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, remaining - v);
    }
  };
  fill(fill, 0, k);
  return out;
}

LaurentMotive fibration_factor(int m, int r, int n, int k) {
  if (r < 1 || r > m) throw DomainError("fibration_factor requires 1 <= r <= m");
  if (n < 0 || k < 0) throw DomainError("fibration_factor requires n, k >= 0");
  LaurentMotive sum;
  for (const auto& e : compositions(k, r)) {
    int exponent = 0;
    for (int i = 1; i <= r; ++i) exponent -= (m + 1 - i) * e[static_cast<std::size_t>(i - 1)];
    sum += LaurentMotive::L(exponent);
  }
  return sum.shifted(n * (r * r - 1) + k * ((m - r) * r + 1));
}

}  // namespace motzeta
