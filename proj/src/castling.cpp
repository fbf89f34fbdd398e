#include "motzeta/castling.hpp"

#include <algorithm>

#include "motzeta/motive_classes.hpp"

namespace motzeta {

namespace {

int sign_power(int e) { return e % 2 == 0 ? 1 : -1; }

void require_ell(int ell, const CastlingDatum& c) {
  if (ell != c.ell)
    throw DomainError("series has " + std::to_string(ell) + " variables, castling datum has l = " +
                      std::to_string(c.ell));
}

/// prod_{j in [lo, hi]} (1 - L^{-j} T^d) as (coefficient, exponent) pairs.
std::vector<std::pair<RationalMotive, MultiIndex>> binomial_product(int lo, int hi,
                                                                    const MultiIndex& d) {
  std::vector<std::pair<LaurentMotive, int>> poly{{LaurentMotive(1), 0}};
  for (int j = lo; j <= hi; ++j) {
    std::vector<std::pair<LaurentMotive, int>> next(poly.size() + 1, {LaurentMotive(), 0});
    for (std::size_t k = 0; k < next.size(); ++k) next[k].second = static_cast<int>(k);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k].first += poly[k].first;
      next[k + 1].first -= poly[k].first * LaurentMotive::L(-j);
    }
    poly = std::move(next);
  }
  std::vector<std::pair<RationalMotive, MultiIndex>> out;
  for (const auto& [c, k] : poly)
    if (!c.is_zero()) out.emplace_back(RationalMotive(c), k * d);
  return out;
}

std::vector<SeriesFactor> binomial_factors(int lo, int hi, const MultiIndex& d) {
  std::vector<SeriesFactor> out;
  for (int j = lo; j <= hi; ++j) out.push_back({j, d});
  return out;
}

/// prod_{j in [lo, hi]} (1 - L^{sign * j}) as a Laurent polynomial.
LaurentMotive one_minus_powers(int lo, int hi, int sign) {
  LaurentMotive out(1);
  for (int j = lo; j <= hi; ++j) out *= LaurentMotive(1) - LaurentMotive::L(sign * j);
  return out;
}

Spectrum one_minus_t_powers(int hi) {
  Spectrum out(1);
  for (int j = 1; j <= hi; ++j) out = out * (Spectrum(1) - Spectrum::monomial(1, j));
  return out;
}

/// Multiplies by prod_{j<=r1} (1 - L^-j T^d) / prod_{j<=r2} (1 - L^-j T^d)
/// after cancelling the common factors.
RationalSeries apply_binomials(const RationalSeries& z, const CastlingDatum& c) {
  if (c.r1 < c.r2) return z.with_factors(binomial_factors(c.r1 + 1, c.r2, c.d));
  return z.times_polynomial(binomial_product(c.r2 + 1, c.r1, c.d));
}

/// s * prod_a (1 - a T^d)^{+-1} for numeric series.
TruncatedSeries<Rational> numeric_binomials(TruncatedSeries<Rational> s, const std::vector<Rational>& as,
                                            const MultiIndex& d, bool inverse) {
  for (const Rational& a : as) {
    TruncatedSeries<Rational> factor(s.ell(), s.order());
    if (inverse) {
      Rational power = 1;
      MultiIndex idx = MultiIndex::zeros(s.ell());
      while (idx.total() <= s.order()) {
        factor.add(idx, power);
        power *= a;
        idx += d;
      }
    } else {
      factor.add(MultiIndex::zeros(s.ell()), Rational(1));
      factor.add(d, -a);
    }
    s = s * factor;
  }
  return s;
}

std::vector<Rational> inverse_powers(const Rational& q, int lo, int hi) {
  std::vector<Rational> out;
  for (int j = lo; j <= hi; ++j) out.push_back(rpow(q, -j));
  return out;
}

/// Z * K * P1/P2 with P_j = prod_{i<=r_j} (1 - q^-i T^d), common factors cancelled.
TruncatedSeries<Rational> numeric_transfer(const TruncatedSeries<Rational>& z, const Rational& q,
                                           const CastlingDatum& c, const Rational& k) {
  TruncatedSeries<Rational> s = z.scaled(k);
  if (c.r1 < c.r2) return numeric_binomials(s, inverse_powers(q, c.r1 + 1, c.r2), c.d, true);
  return numeric_binomials(s, inverse_powers(q, c.r2 + 1, c.r1), c.d, false);
}

}  // namespace

CastlingDatum::CastlingDatum(int m_, int r1_, int r2_, MultiIndex d_)
    : m(m_), r1(r1_), r2(r2_), ell(d_.size()), d(std::move(d_)) {
  if (r1 < 1 || r2 < 1) throw DomainError("castling needs r1, r2 >= 1");
  if (m != r1 + r2) throw DomainError("castling needs m = r1 + r2");
  if (ell < 1) throw DomainError("castling datum needs at least one degree");
  for (int i = 0; i < ell; ++i)
    if (d[i] < 1) throw DomainError("castling degrees must be >= 1");
}

CastlingDatum CastlingDatum::swapped() const { return CastlingDatum(m, r2, r1, d); }

MultiIndex CastlingDatum::degrees(int side) const { return (side == 1 ? r1 : r2) * d; }

BFunction BFunction::from(std::vector<Rational> roots) {
  for (auto& r : roots) {
    r.canonicalize();
    if (r <= 0) throw DomainError("b-function roots must be positive");
  }
  std::sort(roots.begin(), roots.end());
  return BFunction{std::move(roots)};
}

std::string BFunction::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ", ";
    out += motzeta::to_string(roots[i]);
  }
  return out + "}";
}

RationalSeries castle_zeta(const RationalSeries& z1, const CastlingDatum& c) {
  require_ell(z1.ell(), c);
  if (c.r1 == c.r2) return z1;
  const RationalMotive ratio(sl_class(c.r2), sl_class(c.r1));
  return apply_binomials(z1.scaled(ratio), c);
}

RationalSeries castle_local_zeta(const RationalSeries& z1_local, const CastlingDatum& c) {
  require_ell(z1_local.ell(), c);
  if (c.r1 == c.r2) return z1_local;
  const RationalMotive k =
      c.r2 > c.r1 ? RationalMotive(one_minus_powers(c.r1 + 1, c.r2, -1))
                  : RationalMotive(LaurentMotive(1), one_minus_powers(c.r2 + 1, c.r1, -1));
  return apply_binomials(z1_local.scaled(k).shifted((c.r2 - c.r1) * c.d), c);
}

RationalSeries global_to_local(const RationalSeries& z, int dim, const MultiIndex& degree) {
  return z.scaled(RationalMotive(LaurentMotive::L(-dim))).shifted(degree);
}

RationalSeries local_to_global(const RationalSeries& z, int dim, const MultiIndex& degree) {
  return z.scaled(RationalMotive(LaurentMotive::L(dim))).shifted(-1 * degree);
}

bool route_equality(const RationalSeries& z1, const CastlingDatum& c, int order) {
  const RationalSeries via_local =
      castle_local_zeta(global_to_local(z1, c.dimension(1), c.degrees(1)), c);
  const RationalSeries via_global =
      global_to_local(castle_zeta(z1, c), c.dimension(2), c.degrees(2));
  return series_equal(via_local, via_global, order);
}

MilnorFiber castle_milnor(const MilnorFiber& s1, const CastlingDatum& c) {
  if (c.r1 == c.r2) return s1;
  MilnorFiber out;
  const int lo = std::min(c.r1, c.r2) + 1;
  const int hi = std::max(c.r1, c.r2);
  const LaurentMotive extra = one_minus_powers(lo, hi, 1);
  out.counting = c.r2 > c.r1 ? s1.counting * RationalMotive(extra)
                             : s1.counting / RationalMotive(extra);
  if (s1.spectrum) {
    const Spectrum num = *s1.spectrum * one_minus_t_powers(c.r2);
    auto q = num.divide_exact(one_minus_t_powers(c.r1));
    if (!q) throw DomainError("spectrum channel of the Milnor fibre does not divide exactly");
    out.spectrum = *q;
  }
  return out;
}

Spectrum castle_spectrum(const Spectrum& h1, const CastlingDatum& c) {
  const int s1 = sign_power(c.m * c.r1 - 1);
  const int s2 = sign_power(c.m * c.r2 - 1);
  const Spectrum num = (Spectrum(1) + Spectrum(s1) * h1) * one_minus_t_powers(c.r2);
  auto q = num.divide_exact(one_minus_t_powers(c.r1));
  if (!q) throw DomainError("inexact division: input is not the spectrum of a castling partner");
  return Spectrum(s2) * (*q - Spectrum(1));
}

bool spectrum_relation_holds(const Spectrum& h1, const Spectrum& h2, const CastlingDatum& c) {
  const int s1 = sign_power(c.m * c.r1 - 1);
  const int s2 = sign_power(c.m * c.r2 - 1);
  return (Spectrum(1) + Spectrum(s1) * h1) * one_minus_t_powers(c.r2) ==
         (Spectrum(1) + Spectrum(s2) * h2) * one_minus_t_powers(c.r1);
}

BFunction castle_bfunction(const BFunction& b1, const CastlingDatum& c) {
  if (c.ell != 1) throw DomainError("b-function transfer needs a single invariant");
  const int d = c.d[0];
  std::vector<Rational> roots = b1.roots;
  for (int i = 1; i <= c.r2; ++i)
    for (int j = 0; j < d; ++j) roots.emplace_back(i + j, d);
  for (auto& r : roots) r.canonicalize();
  for (int i = 1; i <= c.r1; ++i)
    for (int j = 0; j < d; ++j) {
      Rational target(i + j, d);
      target.canonicalize();
      auto it = std::find(roots.begin(), roots.end(), target);
      if (it == roots.end())
        throw DomainError("root " + to_string(target) + " cannot be cancelled: inconsistent input");
      roots.erase(it);
    }
  return BFunction::from(std::move(roots));
}

TruncatedSeries<Rational> castle_igusa(const TruncatedSeries<Rational>& z1, const Rational& q,
                                       const CastlingDatum& c) {
  require_ell(z1.ell(), c);
  if (c.ell != 1) throw DomainError("Igusa transfer needs a single invariant");
  if (q <= 1) throw DomainError("q must exceed 1");
  if (c.r1 == c.r2) return z1;
  Rational k = 1;
  for (int j = 1; j <= c.r2; ++j) k *= 1 - rpow(q, -j);
  for (int j = 1; j <= c.r1; ++j) k /= 1 - rpow(q, -j);
  return numeric_transfer(z1, q, c, k);
}

TruncatedSeries<Rational> castle_counting(const TruncatedSeries<Rational>& z1, const Rational& q,
                                          const CastlingDatum& c) {
  require_ell(z1.ell(), c);
  if (c.r1 == c.r2) return z1;
  const Rational k = sl_class(c.r2).specialize(q) / sl_class(c.r1).specialize(q);
  return numeric_transfer(z1, q, c, k);
}

IdentityReport compare_series(std::string identity, const TruncatedSeries<Rational>& lhs,
                              const TruncatedSeries<Rational>& rhs, int order) {
  if (lhs.ell() != rhs.ell()) throw DomainError("compared series have different variable counts");
  if (order > lhs.order() || order > rhs.order()) throw DomainError("comparison order exceeds truncation");
  IdentityReport report;
  report.identity = std::move(identity);
  int first_failure = order + 1;
  for (const MultiIndex& n : indices_up_to(lhs.ell(), order)) {
    CoefficientCheck check{n, lhs.coefficient(n), rhs.coefficient(n), false};
    check.equal = check.lhs == check.rhs;
    if (!check.equal) {
      report.all_equal = false;
      first_failure = std::min(first_failure, n.total());
    }
    report.coefficients.push_back(std::move(check));
  }
  report.verified_order = first_failure - 1;
  return report;
}

IdentityReport verify_castling(const PolySystem& sys1, const PolySystem& sys2,
                               const CastlingDatum& c, unsigned q, int order, Leading leading,
                               const CountOptions& options) {
  if (sys1.size() != c.ell || sys2.size() != c.ell)
    throw DomainError("both systems need l = " + std::to_string(c.ell) + " polynomials");
  if (sys1.nvars() != c.dimension(1) || sys2.nvars() != c.dimension(2))
    throw DomainError("systems must live on A^{m r1} and A^{m r2}");
  for (int i = 0; i < c.ell; ++i)
    if (sys1.degree(i) != c.r1 * c.d[i] || sys2.degree(i) != c.r2 * c.d[i])
      throw DomainError("degree mismatch with the castling datum at invariant " + std::to_string(i + 1));
  if (leading == Leading::one && c.ell > 1) leading = Leading::any;
  const auto none = ArcConstraint::unconstrained();
  const auto z1 = zeta_coeffs_from_counts(sys1, q, order, none, leading, true, options);
  const auto z2 = zeta_coeffs_from_counts(sys2, q, order, none, leading, true, options);
  return compare_series("castle_zeta", z2, castle_counting(z1, Rational(q), c), order);
}

IdentityReport full_rank_reduction_check(const Polynomial& f, int m, int r, unsigned q, int order,
                                         Leading leading, const CountOptions& options) {
  if (r < 1 || r > m) throw DomainError("needs 1 <= r <= m");
  if (f.is_zero() || !f.is_homogeneous()) throw DomainError("f must be a nonzero homogeneous polynomial");
  const std::vector<Polynomial> minors = plucker_coordinates(m, r);
  const int space = static_cast<int>(minors.size());
  if (f.nvars() > space)
    throw DomainError("f has more variables than the " + std::to_string(space) + " minors");
  const PolySystem sys(m * r, {f.with_nvars(space).compose(minors).with_nvars(m * r)});
  const int d = f.total_degree();
  const auto unconstrained =
      zeta_coeffs_from_counts(sys, q, order, ArcConstraint::unconstrained(), leading, true, options);
  const auto ranked =
      zeta_coeffs_from_counts(sys, q, order, ArcConstraint::full_rank(m, r), leading, true, options);
  std::vector<Rational> as;
  for (int i = 1; i <= r; ++i) as.push_back(rpow(Rational(q), -(m + 1 - i)));
  const auto rhs = numeric_binomials(ranked, as, MultiIndex({d}), true);
  return compare_series("full_rank_reduction", unconstrained, rhs, order);
}

}  // namespace motzeta
