#pragma once

// Counting-realization classes: Laurent polynomials in the Lefschetz symbol L
// and their quotients.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "motzeta/numeric.hpp"

namespace motzeta {

/// Exact Laurent polynomial with integer coefficients in a single symbol
/// (L by default). Zero coefficients are never stored, so structural equality
/// is mathematical equality.
class LaurentMotive {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentMotive() = default;
  LaurentMotive(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentMotive(const Integer& constant);

  static LaurentMotive monomial(const Integer& coeff, int exponent);
  /// L^exponent.
  static LaurentMotive L(int exponent = 1) { return monomial(1, exponent); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Integer coefficient(int exponent) const;
  /// Exponent range; both require a nonzero value.
  int min_exponent() const;
  int max_exponent() const;

  LaurentMotive& operator+=(const LaurentMotive& rhs);
  LaurentMotive& operator-=(const LaurentMotive& rhs);
  LaurentMotive& operator*=(const LaurentMotive& rhs);
  LaurentMotive operator-() const;

  friend LaurentMotive operator+(LaurentMotive a, const LaurentMotive& b) { return a += b; }
  friend LaurentMotive operator-(LaurentMotive a, const LaurentMotive& b) { return a -= b; }
  friend LaurentMotive operator*(const LaurentMotive& a, const LaurentMotive& b);
  friend bool operator==(const LaurentMotive& a, const LaurentMotive& b) = default;

  LaurentMotive pow(unsigned exponent) const;
  /// Multiplication by L^k.
  LaurentMotive shifted(int k) const;

  /// Exact quotient if `divisor` divides this value in Z[L, L^-1].
  std::optional<LaurentMotive> divide_exact(const LaurentMotive& divisor) const;

  /// Value at L = q; q must be nonzero when negative exponents occur.
  Rational specialize(const Rational& q) const;

  /// Printed with descending exponents, e.g. "L^3 - L", "1 + L^-2", "-5*L^2".
  std::string to_string(char symbol = 'L') const;
  static LaurentMotive parse(std::string_view text, char symbol = 'L');

 private:
  void add_term(int exponent, const Integer& coeff);

  TermMap terms_;
};

/// Quotient of two Laurent motives. Equality is decided by cross
/// multiplication; arithmetic opportunistically cancels exact divisions.
class RationalMotive {
 public:
  RationalMotive() : den_(1) {}
  RationalMotive(long constant) : num_(constant), den_(1) {}  // NOLINT
  RationalMotive(LaurentMotive num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalMotive(LaurentMotive num, LaurentMotive den);

  const LaurentMotive& numerator() const { return num_; }
  const LaurentMotive& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator has been cancelled to 1.
  bool is_laurent() const { return den_ == LaurentMotive(1); }

  RationalMotive& operator+=(const RationalMotive& rhs);
  RationalMotive& operator-=(const RationalMotive& rhs);
  RationalMotive& operator*=(const RationalMotive& rhs);
  RationalMotive& operator/=(const RationalMotive& rhs);
  RationalMotive operator-() const { return RationalMotive(-num_, den_); }

  friend RationalMotive operator+(RationalMotive a, const RationalMotive& b) { return a += b; }
  friend RationalMotive operator-(RationalMotive a, const RationalMotive& b) { return a -= b; }
  friend RationalMotive operator*(RationalMotive a, const RationalMotive& b) { return a *= b; }
  friend RationalMotive operator/(RationalMotive a, const RationalMotive& b) { return a /= b; }
  friend bool operator==(const RationalMotive& a, const RationalMotive& b);

  /// Value at L = q. Throws DomainError when the denominator vanishes there.
  Rational specialize(const Rational& q) const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;
  static RationalMotive parse(std::string_view text);

 private:
  void normalize();

  LaurentMotive num_;
  LaurentMotive den_;
};

}  // namespace motzeta
