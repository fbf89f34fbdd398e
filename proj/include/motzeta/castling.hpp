#pragma once

// Castling transfer operators on every realization the library carries, and
// the drivers that check them against brute-force counts.

#include <string>
#include <vector>

#include "motzeta/arcs.hpp"
#include "motzeta/resolution.hpp"
#include "motzeta/series.hpp"
#include "motzeta/spectrum.hpp"

namespace motzeta {

/// Castling partners on M_{m,r1} and M_{m,r2} with m = r1 + r2; the l
/// invariants of side j have degrees r_j * d_i.
struct CastlingDatum {
  int m = 0;
  int r1 = 0;
  int r2 = 0;
  int ell = 1;
  MultiIndex d;

  CastlingDatum() = default;
  CastlingDatum(int m, int r1, int r2, MultiIndex d);

  /// The same pair read in the opposite direction.
  CastlingDatum swapped() const;
  /// r_j * d for side j in {1, 2}.
  MultiIndex degrees(int side) const;
  int dimension(int side) const { return m * (side == 1 ? r1 : r2); }
};

/// b(s) = prod (s + rho) over a multiset of roots, kept sorted.
struct BFunction {
  std::vector<Rational> roots;

  static BFunction from(std::vector<Rational> roots);
  friend bool operator==(const BFunction&, const BFunction&) = default;
  std::string to_string() const;
};

/// Z2 = Z1 [SL_r2] prod_{j<=r1} (1 - L^-j T^d) / ([SL_r1] prod_{j<=r2} (1 - L^-j T^d)).
RationalSeries castle_zeta(const RationalSeries& z1, const CastlingDatum& c);

/// Local version at the origin, written inside the power-series ring:
/// Z2_0 = Z1_0 T^{d(r2-r1)} prod_{j<=r1}(1 - L^-j T^d) prod_{j<=r2}(1 - L^-j)
///        / (prod_{j<=r2}(1 - L^-j T^d) prod_{j<=r1}(1 - L^-j)),
/// which is the local relation after multiplying both sides by T^{d max(r1,r2)}.
RationalSeries castle_local_zeta(const RationalSeries& z1_local, const CastlingDatum& c);

/// Z_{f,0} = L^{-dim} T^{deg} Z_f for homogeneous f (and its inverse).
RationalSeries global_to_local(const RationalSeries& z, int dim, const MultiIndex& degree);
RationalSeries local_to_global(const RationalSeries& z, int dim, const MultiIndex& degree);

/// castle_local_zeta(global_to_local(Z1)) vs global_to_local(castle_zeta(Z1)).
bool route_equality(const RationalSeries& z1, const CastlingDatum& c, int order);

/// S2 = S1 prod_{j<=r2} (1 - L^j) / prod_{j<=r1} (1 - L^j); the spectrum
/// channel uses t for L and must divide exactly.
MilnorFiber castle_milnor(const MilnorFiber& s1, const CastlingDatum& c);

/// h2 = (-1)^{m r2 - 1} ((1 + (-1)^{m r1 - 1} h1) prod_{j<=r2}(1 - t^j) / prod_{j<=r1}(1 - t^j) - 1).
Spectrum castle_spectrum(const Spectrum& h1, const CastlingDatum& c);

/// Both sides of the spectrum relation, (1 + (-1)^{m r_j - 1} h_j) / prod_{i<=r_j}(1 - t^i),
/// cross-multiplied: returns true when they agree exactly.
bool spectrum_relation_holds(const Spectrum& h1, const Spectrum& h2, const CastlingDatum& c);

/// Roots gain {(i+j)/d : i <= r2, j < d} and lose {(i+j)/d : i <= r1, j < d}.
BFunction castle_bfunction(const BFunction& b1, const CastlingDatum& c);

/// Z2 = Z1 prod_{j<=r2} (1-q^-j)/(1-q^-j t^d) / prod_{j<=r1} (same), exact.
TruncatedSeries<Rational> castle_igusa(const TruncatedSeries<Rational>& z1, const Rational& q,
                                       const CastlingDatum& c);

/// The counting realization of castle_zeta applied to a truncated series of
/// numbers (L = q, T^d = prod T_i^{d_i}).
TruncatedSeries<Rational> castle_counting(const TruncatedSeries<Rational>& z1, const Rational& q,
                                          const CastlingDatum& c);

struct CoefficientCheck {
  MultiIndex n;
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

struct IdentityReport {
  std::string identity;
  std::vector<CoefficientCheck> coefficients;
  bool all_equal = true;
  /// Largest k such that every coefficient with |n| <= k agrees (-1 if none).
  int verified_order = -1;
};

IdentityReport compare_series(std::string identity, const TruncatedSeries<Rational>& lhs,
                              const TruncatedSeries<Rational>& rhs, int order);

/// Counts both systems (augmented zeta series, coefficient of T^n for all
/// n >= 0 with |n| <= order) and compares the count series of sys2 with the
/// castled count series of sys1.
IdentityReport verify_castling(const PolySystem& sys1, const PolySystem& sys2,
                               const CastlingDatum& c, unsigned q, int order, Leading leading,
                               const CountOptions& options = {});

/// For f on the space of r x r minors of an m x r matrix (homogeneous of
/// degree d), compares the count series of f o minors with
/// prod_{i<=r} (1 - q^{-(m+1-i)} T^d)^{-1} times the full-rank-constrained one.
IdentityReport full_rank_reduction_check(const Polynomial& f, int m, int r, unsigned q, int order,
                                         Leading leading, const CountOptions& options = {});

}  // namespace motzeta
