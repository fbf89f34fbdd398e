#pragma once

// Exact counts of truncated arcs over F_q with prescribed orders of vanishing
// of f_1, ..., f_l, and the zeta-series coefficients they realize.

#include <cstdint>
#include <map>
#include <string>

#include "motzeta/multi_index.hpp"
#include "motzeta/numeric.hpp"
#include "motzeta/polynomial.hpp"
#include "motzeta/series.hpp"

namespace motzeta {

struct ArcConstraint {
  enum class Kind { none, origin, full_rank };
  Kind kind = Kind::none;
  /// For full_rank: the constant-term vector, read row-major as an m x r
  /// matrix, must have rank r.
  int m = 0;
  int r = 0;

  static ArcConstraint unconstrained() { return {}; }
  static ArcConstraint origin() { return {Kind::origin, 0, 0}; }
  static ArcConstraint full_rank(int m, int r) { return {Kind::full_rank, m, r}; }

  /// "none", "origin", "full-rank:m,r".
  std::string to_string() const;
  static ArcConstraint parse(const std::string& text);
};

enum class Leading { one, any };

struct CountOptions {
  int threads = 1;
  /// Refuse when the work estimate exceeds this many lane evaluations.
  Integer budget = Integer(1) << 30;
};

struct ArcCount {
  Integer leading_one;  ///< Only meaningful for l = 1.
  Integer all;
};

/// Lane evaluations the enumerator performs for this request: the
/// constant-term scan (q^r points, or 1 under the origin constraint) plus
/// A0 * q^{rH}, where A0 is the number of constant terms surviving the scan
/// and H = floor(max n_i / 2). When the scan alone exceeds 2^26 points the
/// scan is skipped and the bound q^r + q^{r(H+1)} is returned instead.
Integer arc_work_estimate(const PolySystem& sys, const MultiIndex& n, unsigned q,
                          const ArcConstraint& constraint);

/// Number of arcs in L_{|n|}(A^r)(F_q) with ord_t f_i = n_i for every i (and
/// leading coefficient 1 when leading == one). Rejects n_i = 0 and leading
/// one with l > 1. q must be a prime below 2^15.
Integer count_arcs(const PolySystem& sys, const MultiIndex& n, unsigned q,
                   const ArcConstraint& constraint, Leading leading,
                   const CountOptions& options = {});

/// Both counts at once; n_i = 0 is allowed here (ord_t f_i = 0 means
/// f_i(phi(0)) != 0, resp. == 1 for the leading-one count).
ArcCount count_arcs_both(const PolySystem& sys, const MultiIndex& n, unsigned q,
                         const ArcConstraint& constraint, const CountOptions& options = {});

/// Counts for every n with |n| <= n_max and all n_i >= 1 (>= 0 if augmented).
struct ArcCountTable {
  unsigned q = 0;
  int n_max = 0;
  bool augmented = false;
  std::map<MultiIndex, ArcCount> entries;
};

ArcCountTable count_table(const PolySystem& sys, unsigned q, int n_max,
                          const ArcConstraint& constraint, bool augmented,
                          const CountOptions& options = {});

/// Coefficient of T^n is count * q^{-|n| r}. With `augmented` the n = 0 and
/// n_i = 0 coefficients are included, which is the normalization under which
/// the castling and homogeneity identities hold term by term.
TruncatedSeries<Rational> zeta_coeffs_from_counts(const ArcCountTable& table, int nvars,
                                                  Leading leading);
TruncatedSeries<Rational> zeta_coeffs_from_counts(const PolySystem& sys, unsigned q, int n_max,
                                                  const ArcConstraint& constraint,
                                                  Leading leading, bool augmented = false,
                                                  const CountOptions& options = {});

/// #X_n^1 * q^{(d-1) r} == #X_{n+d,0}^1 for one homogeneous f of degree d.
bool homogeneity_check(const PolySystem& sys, unsigned q, int n, const CountOptions& options = {});

/// Igusa series coefficients: t^n carries #{x mod p^{n+1} : ord_p f(x) = n}
/// * p^{-m(n+1)}, n = 0..n_max. Requires p^{n_max+1} < 2^15.
TruncatedSeries<Rational> igusa_coeffs(const Polynomial& f, int nvars, unsigned p, int n_max,
                                       const CountOptions& options = {});

/// #{x mod p^{n+1} : ord_p f(x) = n}.
Integer igusa_count(const Polynomial& f, int nvars, unsigned p, int n,
                    const CountOptions& options = {});

bool is_prime(unsigned q);

}  // namespace motzeta
