#pragma once

// Brute-force reference counters. They share nothing with the library's
// enumeration code beyond the Polynomial and ArcConstraint types.

#include <cstdint>
#include <vector>

#include "motzeta/arcs.hpp"

namespace oracle {

using motzeta::Integer;
using motzeta::MultiIndex;
using motzeta::Polynomial;
using motzeta::PolySystem;

using Series = std::vector<std::int64_t>;

inline std::int64_t reduce(const Integer& c, std::int64_t mod) {
  Integer r = c % mod;
  if (r < 0) r += mod;
  return r.get_si();
}

inline Series mul(const Series& a, const Series& b, std::int64_t mod) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % mod;
  return out;
}

/// f(phi) mod (q, t^len), phi given coordinate-wise.
inline Series eval_series(const Polynomial& f, const std::vector<Series>& phi, std::int64_t q) {
  const std::size_t len = phi.front().size();
  Series out(len, 0);
  for (const auto& [e, c] : f.terms()) {
    Series term(len, 0);
    term[0] = reduce(c, q);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term = mul(term, phi[v], q);
    for (std::size_t k = 0; k < len; ++k) out[k] = (out[k] + term[k]) % q;
  }
  return out;
}

inline int rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t q) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] % q) piv = i;
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    std::int64_t inv = 1;
    while ((a[rank][col] * inv) % q != 1) ++inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] % q == 0) continue;
      const std::int64_t f = a[i][col] * inv % q;
      for (int j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

inline bool constraint_ok(const std::vector<Series>& phi, const motzeta::ArcConstraint& c,
                          std::int64_t q) {
  using Kind = motzeta::ArcConstraint::Kind;
  if (c.kind == Kind::none) return true;
  if (c.kind == Kind::origin) {
    for (const auto& s : phi)
      if (s[0] != 0) return false;
    return true;
  }
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(c.m),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(c.r)));
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.r; ++j) m[i][j] = phi[static_cast<std::size_t>(i * c.r + j)][0];
  return rank_mod(m, q) == c.r;
}

/// Both counts by running over every arc in L_{|n|}(A^r)(F_q).
inline motzeta::ArcCount count_arcs(const PolySystem& sys, const MultiIndex& n, std::int64_t q,
                                    const motzeta::ArcConstraint& c = {}) {
  const int r = sys.nvars();
  const std::size_t len = static_cast<std::size_t>(n.total() + 1);
  const std::size_t digits = static_cast<std::size_t>(r) * len;
  std::vector<std::int64_t> d(digits, 0);
  motzeta::ArcCount out{0, 0};
  while (true) {
    std::vector<Series> phi(static_cast<std::size_t>(r), Series(len));
    for (std::size_t i = 0; i < digits; ++i) phi[i / len][i % len] = d[i];
    if (constraint_ok(phi, c, q)) {
      bool all = true, one = true;
      for (int i = 0; i < sys.size() && all; ++i) {
        const Series v = eval_series(sys[i], phi, q);
        const std::size_t ni = static_cast<std::size_t>(n[i]);
        for (std::size_t k = 0; k < ni; ++k)
          if (v[k]) all = false;
        if (v[ni] == 0) all = false;
        if (v[ni] != 1) one = false;
      }
      if (all) {
        ++out.all;
        if (one) ++out.leading_one;
      }
    }
    std::size_t i = 0;
    while (i < digits && ++d[i] == q) d[i++] = 0;
    if (i == digits) break;
  }
  return out;
}

/// #{x mod p^{n+1} : ord_p f(x) = n} by direct enumeration.
inline Integer igusa_count(const Polynomial& f, int nvars, std::int64_t p, int n) {
  std::int64_t mod = 1;
  for (int i = 0; i <= n; ++i) mod *= p;
  const std::int64_t low = mod / p;
  std::vector<std::int64_t> x(static_cast<std::size_t>(nvars), 0);
  Integer count = 0;
  while (true) {
    std::int64_t value = 0;
    for (const auto& [e, c] : f.terms()) {
      std::int64_t term = reduce(c, mod);
      for (std::size_t v = 0; v < e.size(); ++v)
        for (int k = 0; k < e[v]; ++k) term = term * x[v] % mod;
      value = (value + term) % mod;
    }
    if (value % low == 0 && value != 0) ++count;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == mod) x[i++] = 0;
    if (i == x.size()) break;
  }
  return count;
}

}  // namespace oracle
