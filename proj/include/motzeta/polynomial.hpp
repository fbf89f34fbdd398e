#pragma once

// Multivariate integer polynomials in x1..xr and polynomial systems.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "motzeta/numeric.hpp"

namespace motzeta {

class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(const Integer& c, int nvars = 0);
  /// x_{index}, 1-based.
  static Polynomial variable(int index, int nvars = 0);

  int nvars() const { return nvars_; }
  /// Exponent vectors all have length nvars().
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  bool is_homogeneous() const;

  /// Pads every exponent vector with zeros up to n variables.
  Polynomial with_nvars(int n) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  /// d/dx_{index}, 1-based.
  Polynomial derivative(int index) const;
  /// f(g_1, ..., g_n) for n = nvars().
  Polynomial compose(const std::vector<Polynomial>& substitutes) const;
  Integer evaluate(const std::vector<Integer>& point) const;

  /// Graded-lex descending, e.g. "x1^2 + 3*x1*x2 - x3 + 1".
  std::string to_string() const;
  /// Grammar: integers, x1..xr, + - * ^ (non-negative integer exponents), parentheses.
  static Polynomial parse(std::string_view text);

 private:
  void add_term(const Exponents& e, const Integer& c);

  int nvars_ = 0;
  std::map<Exponents, Integer> terms_;
};

/// l polynomials on affine r-space.
class PolySystem {
 public:
  PolySystem(int nvars, std::vector<Polynomial> polys);
  /// Comma-separated list, variables counted from the highest index used
  /// unless nvars is given.
  static PolySystem parse(std::string_view text, int nvars = 0);

  int nvars() const { return nvars_; }
  int size() const { return static_cast<int>(polys_.size()); }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const Polynomial& operator[](int i) const { return polys_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  bool homogeneous(int i) const { return homogeneous_[static_cast<std::size_t>(i)]; }
  bool all_homogeneous() const;
  std::string to_string() const;

 private:
  int nvars_;
  std::vector<Polynomial> polys_;
  std::vector<int> degrees_;
  std::vector<bool> homogeneous_;
};

/// Ordered r-element subsets of {1..m}, lexicographic.
std::vector<std::vector<int>> row_subsets(int m, int r);

/// Determinant of the r x r submatrix of the generic m x r matrix with rows
/// `rows` (1-based). Entry (i, j) is the variable x_{(i-1)r + j}.
Polynomial matrix_minor(int m, int r, const std::vector<int>& rows);

/// The Plücker coordinates of the generic m x r matrix: all maximal minors,
/// row subsets in lexicographic order.
std::vector<Polynomial> plucker_coordinates(int m, int r);

/// Plücker coordinates of the generic m x r matrix indexed by the
/// complementary (m-r)-subsets: entry S is sign(S, S^c) * minor(S^c). This
/// realizes the identification of the two Plücker spaces of a castling pair.
std::vector<Polynomial> dual_plucker_coordinates(int m, int r);

}  // namespace motzeta
