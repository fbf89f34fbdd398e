#pragma once

// Polynomials in t with rational exponents: the Hodge-spectrum realization.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "motzeta/laurent.hpp"
#include "motzeta/numeric.hpp"

namespace motzeta {

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return a < b; }
};

class Spectrum {
 public:
  using TermMap = std::map<Rational, Integer, RationalLess>;

  Spectrum() = default;
  Spectrum(long constant);  // NOLINT(google-explicit-constructor)
  static Spectrum monomial(const Integer& coeff, const Rational& exponent);
  /// The image of a counting class under L -> t.
  static Spectrum from_laurent(const LaurentMotive& a);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Rational& exponent) const;

  Spectrum& operator+=(const Spectrum& rhs);
  Spectrum& operator-=(const Spectrum& rhs);
  Spectrum operator-() const;
  friend Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
  friend Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
  friend Spectrum operator*(const Spectrum& a, const Spectrum& b);
  friend bool operator==(const Spectrum& a, const Spectrum& b);

  /// Exact quotient in Z[t^{1/Z}], if one exists.
  std::optional<Spectrum> divide_exact(const Spectrum& divisor) const;

  /// Ascending exponents, e.g. "1 + t^(1/2)", "t^2 - t^(3/2) + t^(7/2)".
  std::string to_string() const;
  /// Integer combinations of t, t^k, t^(a/b), t^-k, with optional "c*".
  static Spectrum parse(std::string_view text);

 private:
  void add_term(const Rational& exponent, const Integer& coeff);

  TermMap terms_;
};

}  // namespace motzeta
