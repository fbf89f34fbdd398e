#pragma once

// Closed-form rational generating series in T_1..T_l and their truncated
// expansions.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "motzeta/laurent.hpp"
#include "motzeta/multi_index.hpp"

namespace motzeta {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const LaurentMotive& x) { return x.is_zero(); }
inline bool is_zero(const RationalMotive& x) { return x.is_zero(); }

/// Coefficients of T^n for all n >= 0 with |n| <= order. Absent entries are
/// zero; products drop everything beyond the order.
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries(int ell, int order) : ell_(ell), order_(order) {
    if (ell < 1) throw DomainError("truncated series needs at least one variable");
    if (order < 0) throw DomainError("truncation order must be >= 0");
  }

  int ell() const { return ell_; }
  int order() const { return order_; }
  const std::map<MultiIndex, C>& coeffs() const { return coeffs_; }

  C coefficient(const MultiIndex& n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? C(0) : it->second;
  }

  /// Adds c at T^n; out-of-range indices are discarded.
  void add(const MultiIndex& n, const C& c) {
    check_arity(n);
    if (n.total() > order_ || !n.nonnegative() || is_zero(c)) return;
    auto [it, inserted] = coeffs_.emplace(n, c);
    if (inserted) return;
    it->second += c;
    if (is_zero(it->second)) coeffs_.erase(it);
  }

  void set(const MultiIndex& n, const C& c) {
    check_arity(n);
    if (n.total() > order_ || !n.nonnegative())
      throw DomainError("index " + n.to_string() + " outside truncated range");
    coeffs_.erase(n);
    if (!is_zero(c)) coeffs_.emplace(n, c);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    check_compatible(rhs);
    for (const auto& [n, c] : rhs.coeffs_) add(n, c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries out(a.ell_, a.order_ < b.order_ ? a.order_ : b.order_);
    for (const auto& [na, ca] : a.coeffs_)
      for (const auto& [nb, cb] : b.coeffs_) {
        if (na.total() + nb.total() > out.order_) continue;
        out.add(na + nb, ca * cb);
      }
    return out;
  }

  TruncatedSeries scaled(const C& factor) const {
    TruncatedSeries out(ell_, order_);
    for (const auto& [n, c] : coeffs_) out.add(n, c * factor);
    return out;
  }

  /// Coefficientwise equality on the common truncation range.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ell_ != b.ell_) return false;
    const int order = a.order_ < b.order_ ? a.order_ : b.order_;
    for (const auto& [n, c] : a.coeffs_)
      if (n.total() <= order && !(b.coefficient(n) == c)) return false;
    for (const auto& [n, c] : b.coeffs_)
      if (n.total() <= order && !(a.coefficient(n) == c)) return false;
    return true;
  }

  template <class F>
  auto transformed(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    TruncatedSeries<D> out(ell_, order_);
    for (const auto& [n, c] : coeffs_) out.add(n, f(c));
    return out;
  }

 private:
  void check_arity(const MultiIndex& n) const {
    if (n.size() != ell_) throw DomainError("multi-index arity mismatch");
  }
  void check_compatible(const TruncatedSeries& o) const {
    if (o.ell_ != ell_) throw DomainError("series variable counts differ");
  }

  int ell_;
  int order_;
  std::map<MultiIndex, C> coeffs_;
};

/// The factor (1 - L^{-nu} T^N)^{-1}.
struct SeriesFactor {
  int nu = 1;
  MultiIndex N;
  friend bool operator==(const SeriesFactor&, const SeriesFactor&) = default;
};

/// coeff * T^shift * prod_j (1 - L^{-nu_j} T^{N_j})^{-1}.
struct SeriesTerm {
  RationalMotive coeff;
  MultiIndex shift;
  std::vector<SeriesFactor> factors;

  MultiIndex factor_degree() const;
};

/// Sum of factored terms. Never brought to a common denominator; equality
/// is decided by expansion to a caller-chosen order.
class RationalSeries {
 public:
  explicit RationalSeries(int ell);

  int ell() const { return ell_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Validates N != 0, N >= 0 and nu >= 1 for every factor.
  void add_term(SeriesTerm term);

  static RationalSeries monomial(int ell, RationalMotive coeff, MultiIndex shift);

  RationalSeries& operator+=(const RationalSeries& rhs);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);

  RationalSeries scaled(const RationalMotive& factor) const;
  /// Multiplication by T^shift (entries may be negative).
  RationalSeries shifted(const MultiIndex& shift) const;
  /// Multiplication by a polynomial sum_k c_k T^{s_k}.
  RationalSeries times_polynomial(
      const std::vector<std::pair<RationalMotive, MultiIndex>>& poly) const;
  /// Division by prod (1 - L^{-nu} T^N) over the given factors.
  RationalSeries with_factors(const std::vector<SeriesFactor>& extra) const;

  /// "(coeff)*T^a / ((1 - L^-v*T^N)...)" terms joined by " + ".
  std::string to_string() const;
  static RationalSeries parse(std::string_view text, int ell);

 private:
  int ell_;
  std::vector<SeriesTerm> terms_;
};

/// Exact coefficients of every T^n with |n| <= order. Throws DomainError if
/// a negative power of some T_i survives the summation.
TruncatedSeries<RationalMotive> expand(const RationalSeries& series, int order);

/// Constant term of the expansion in T^{-1} (after T_i -> S^{alpha_i} when
/// l > 1), i.e. lim_{T -> infinity}. The motivic Milnor fiber is minus this.
/// Throws DomainError naming the first term whose shift exceeds its factor
/// degree in some coordinate.
RationalMotive limit_at_infinity(const RationalSeries& series, const std::vector<int>& alpha);

/// As above; for l > 1 evaluates with alpha = (1,...,1) and (1,2,...,l) and
/// throws DomainError if the two disagree.
RationalMotive limit_at_infinity(const RationalSeries& series);

bool series_equal(const RationalSeries& a, const RationalSeries& b, int order);

/// Counting realization L -> q.
TruncatedSeries<Rational> specialize(const TruncatedSeries<RationalMotive>& s, const Rational& q);

std::string to_string(const TruncatedSeries<Rational>& s);
std::string to_string(const TruncatedSeries<RationalMotive>& s);

}  // namespace motzeta
