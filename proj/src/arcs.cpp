#include "motzeta/arcs.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "motzeta/batch_eval.hpp"
#include "parallel.hpp"

// Enumeration scheme. An arc is phi = sum_j a_j t^j with a_j in F_q^r. With
// N = max n_i, only the coefficients of t^0..t^N of every f_i(phi) matter, so
// levels above N are free. Split the remaining levels at H = floor(N/2): for
// a fixed choice of the low levels 0..H, every coefficient c_{i,k} with k <= N
// is affine in the high levels H+1..N, because a product of two high terms
// already has t-degree > N:
//
//   c_{i,k} = [t^k] f_i(phi_low) + sum_{j > H, v} a_{j,v} [t^{k-j}] d_v f_i(phi_low).
//
// The vanishing conditions c_{i,k} = 0 (k < n_i) and the leading condition at
// k = n_i become a linear system over F_q whose solutions are counted by rank;
// "leading coefficient nonzero" is handled by inclusion-exclusion. Only the
// low levels are enumerated, in lane batches through the SIMD evaluator.

namespace motzeta {

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::string ArcConstraint::to_string() const {
  switch (kind) {
    case Kind::none:
      return "none";
    case Kind::origin:
      return "origin";
    case Kind::full_rank:
      return "full-rank:" + std::to_string(m) + "," + std::to_string(r);
  }
  return "none";
}

ArcConstraint ArcConstraint::parse(const std::string& text) {
  if (text == "none") return unconstrained();
  if (text == "origin") return origin();
  const std::string prefix = "full-rank:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string rest = text.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("expected full-rank:m,r");
    try {
      std::size_t used_m = 0;
      std::size_t used_r = 0;
      const int m = std::stoi(rest.substr(0, comma), &used_m);
      const int r = std::stoi(rest.substr(comma + 1), &used_r);
      if (used_m != comma || used_r != rest.size() - comma - 1) throw ParseError("bad full-rank");
      if (r < 1 || m < r) throw ParseError("full-rank needs 1 <= r <= m");
      return full_rank(m, r);
    } catch (const std::logic_error&) {
      throw ParseError("expected full-rank:m,r with integers");
    }
  }
  throw ParseError("unknown constraint '" + text + "' (none, origin, full-rank:m,r)");
}

namespace {

constexpr std::size_t kChunkLanes = 512;
constexpr unsigned long kScanLimit = 1UL << 26;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) {
  std::uint64_t result = 1;
  std::uint64_t base = a % q;
  for (std::uint32_t e = q - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<std::uint32_t>(result);
}

/// Incremental row echelon form of an affine system over F_q. Rows have
/// `vars` coefficients followed by the right-hand side.
class Echelon {
 public:
  Echelon(int vars, std::uint32_t q, const std::vector<std::uint32_t>& inverses)
      : width_(static_cast<std::size_t>(vars) + 1), q_(q), inv_(&inverses) {
    tmp_.resize(width_);
  }

  void clear() {
    rows_.clear();
    pivots_.clear();
  }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// False when the row makes the system inconsistent.
  bool add(const std::uint32_t* row) {
    std::copy(row, row + width_, tmp_.begin());
    for (std::size_t p = 0; p < pivots_.size(); ++p) {
      const std::uint32_t c = tmp_[pivots_[p]];
      if (c == 0) continue;
      const std::uint32_t* prow = rows_.data() + p * width_;
      const std::uint64_t neg = q_ - c;
      for (std::size_t j = pivots_[p]; j < width_; ++j)
        tmp_[j] = static_cast<std::uint32_t>((tmp_[j] + neg * prow[j]) % q_);
    }
    std::size_t lead = 0;
    while (lead + 1 < width_ && tmp_[lead] == 0) ++lead;
    if (lead + 1 == width_) return tmp_[lead] == 0;
    const std::uint64_t inv = (*inv_)[tmp_[lead]];
    for (std::size_t j = lead; j < width_; ++j)
      tmp_[j] = static_cast<std::uint32_t>(tmp_[j] * inv % q_);
    rows_.insert(rows_.end(), tmp_.begin(), tmp_.end());
    pivots_.push_back(lead);
    return true;
  }

 private:
  std::size_t width_;
  std::uint64_t q_;
  const std::vector<std::uint32_t>* inv_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> tmp_;
};

int rank_mod(std::vector<std::uint32_t> mat, int rows, int cols, std::uint32_t q) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (mat[static_cast<std::size_t>(i * cols + c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j)
      std::swap(mat[static_cast<std::size_t>(pivot * cols + j)],
                mat[static_cast<std::size_t>(rank * cols + j)]);
    const std::uint64_t inv = inverse_mod(mat[static_cast<std::size_t>(rank * cols + c)], q);
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const std::uint64_t f = mat[static_cast<std::size_t>(i * cols + c)] * inv % q;
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) {
        auto& x = mat[static_cast<std::size_t>(i * cols + j)];
        x = static_cast<std::uint32_t>((x + (q - f) * mat[static_cast<std::size_t>(rank * cols + j)]) % q);
      }
    }
    ++rank;
  }
  return rank;
}

void check_field(unsigned q) {
  if (!is_prime(q)) throw DomainError("q = " + std::to_string(q) + " is not prime (prime fields only)");
  if (q >= simd::kMaxModulus) throw DomainError("q must be below 2^15");
}

struct Plan {
  int r = 0;
  int ell = 0;
  MultiIndex n;
  std::uint32_t q = 0;
  int total = 0;  // |n|: truncation level of the arcs
  int nstar = 0;  // max n_i
  int low = 0;    // H: last enumerated level
  int nv = 0;     // number of high-level unknowns
  std::vector<CompiledPolynomial> f;
  std::vector<std::vector<CompiledPolynomial>> df;
  std::vector<int> max_exp;
  std::vector<std::vector<std::uint32_t>> a0;
  std::uint64_t inner = 1;  // q^{r H}
  std::uint64_t lanes = 0;
  std::vector<std::uint32_t> inverses;
};

Integer scan_cost(int r, unsigned q, const ArcConstraint& c) {
  return c.kind == ArcConstraint::Kind::origin ? Integer(1) : ipow(Integer(q), static_cast<unsigned long>(r));
}

void validate(const PolySystem& sys, const MultiIndex& n, unsigned q, const ArcConstraint& c) {
  check_field(q);
  if (n.size() != sys.size())
    throw DomainError("multi-index has " + std::to_string(n.size()) + " entries for " +
                      std::to_string(sys.size()) + " polynomials");
  if (!n.nonnegative()) throw DomainError("orders must be non-negative");
  if (c.kind == ArcConstraint::Kind::full_rank && c.m * c.r != sys.nvars())
    throw DomainError("full-rank:" + std::to_string(c.m) + "," + std::to_string(c.r) +
                      " needs " + std::to_string(c.m * c.r) + " variables, system has " +
                      std::to_string(sys.nvars()));
}

/// Builds the plan including the constant-term scan; throws BudgetExceeded
/// before doing work that exceeds the budget.
Plan make_plan(const PolySystem& sys, const MultiIndex& n, unsigned q, const ArcConstraint& c,
               const Integer& budget) {
  validate(sys, n, q, c);
  Plan plan;
  plan.r = sys.nvars();
  plan.ell = sys.size();
  plan.n = n;
  plan.q = q;
  plan.total = n.total();
  plan.nstar = n.max_entry();
  plan.low = plan.nstar / 2;
  plan.nv = plan.r * (plan.nstar - plan.low);

  const Integer inner = ipow(Integer(q), static_cast<unsigned long>(plan.r * plan.low));
  const Integer scan = scan_cost(plan.r, q, c);
  if (scan > budget || scan > Integer(kScanLimit))
    throw BudgetExceeded("arc enumeration exceeds budget", scan + scan * inner);

  plan.max_exp.assign(static_cast<std::size_t>(plan.r), 0);
  plan.df.resize(static_cast<std::size_t>(plan.ell));
  for (int i = 0; i < plan.ell; ++i) {
    plan.f.emplace_back(sys[i], plan.r, q);
    if (plan.nstar > plan.low)
      for (int v = 1; v <= plan.r; ++v)
        plan.df[static_cast<std::size_t>(i)].emplace_back(sys[i].derivative(v), plan.r, q);
    for (int v = 0; v < plan.r; ++v)
      plan.max_exp[static_cast<std::size_t>(v)] = std::max(
          plan.max_exp[static_cast<std::size_t>(v)], plan.f.back().max_exponent[static_cast<std::size_t>(v)]);
  }

  // Constant-term scan.
  std::vector<std::uint32_t> point(static_cast<std::size_t>(plan.r), 0);
  auto accept = [&](const std::vector<std::uint32_t>& x) {
    for (int i = 0; i < plan.ell; ++i)
      if (n[i] >= 1 && plan.f[static_cast<std::size_t>(i)].evaluate(x) != 0) return false;
    if (c.kind == ArcConstraint::Kind::full_rank && rank_mod(x, c.m, c.r, q) != c.r) return false;
    return true;
  };
  if (c.kind == ArcConstraint::Kind::origin) {
    if (accept(point)) plan.a0.push_back(point);
  } else {
    const unsigned long count = scan.get_ui();
    for (unsigned long idx = 0; idx < count; ++idx) {
      unsigned long rem = idx;
      for (auto& x : point) {
        x = static_cast<std::uint32_t>(rem % q);
        rem /= q;
      }
      if (accept(point)) plan.a0.push_back(point);
    }
  }
  const Integer lanes = Integer(static_cast<unsigned long>(plan.a0.size())) * inner;
  if (scan + lanes > budget) throw BudgetExceeded("arc enumeration exceeds budget", scan + lanes);
  plan.inner = inner.get_ui();
  plan.lanes = lanes.get_ui();

  plan.inverses.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) plan.inverses[a] = inverse_mod(a, q);
  return plan;
}

struct Tally {
  std::vector<long> one;
  std::vector<long> any;
};

class Worker {
 public:
  explicit Worker(const Plan& plan)
      : plan_(plan),
        eval_(plan.nstar, plan.q, simd::active_kernels()),
        vars_(static_cast<std::size_t>(plan.r)),
        values_(static_cast<std::size_t>(plan.ell)),
        derivs_(static_cast<std::size_t>(plan.ell)),
        base_(plan.nv, plan.q, plan.inverses),
        trial_(plan.nv, plan.q, plan.inverses),
        row_(static_cast<std::size_t>(plan.nv) + 1) {
    tally.one.assign(static_cast<std::size_t>(plan.nv) + 1, 0);
    tally.any.assign(static_cast<std::size_t>(plan.nv) + 1, 0);
    for (auto& d : derivs_) d.resize(plan.nstar > plan.low ? static_cast<std::size_t>(plan.r) : 0);
  }

  void run(std::uint64_t begin, std::uint64_t end) {
    const std::size_t lanes = static_cast<std::size_t>(end - begin);
    fill(begin, lanes);
    eval_.load(vars_, plan_.max_exp);
    const int high_order = plan_.nstar - plan_.low - 1;
    for (int i = 0; i < plan_.ell; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      eval_.evaluate(plan_.f[ui], plan_.nstar, values_[ui]);
      if (plan_.n[i] > plan_.low)
        for (int v = 0; v < plan_.r; ++v)
          eval_.evaluate(plan_.df[ui][static_cast<std::size_t>(v)], high_order,
                         derivs_[ui][static_cast<std::size_t>(v)]);
    }
    for (std::size_t lane = 0; lane < lanes; ++lane) count_lane(lane);
  }

  Tally tally;

 private:
  void fill(std::uint64_t begin, std::size_t lanes) {
    for (auto& x : vars_)
      if (x.lanes() != lanes || x.order() != plan_.nstar) x.reset(plan_.nstar, lanes);
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      const std::uint64_t g = begin + lane;
      const auto& a0 = plan_.a0[static_cast<std::size_t>(g / plan_.inner)];
      std::uint64_t rem = g % plan_.inner;
      for (int v = 0; v < plan_.r; ++v) vars_[static_cast<std::size_t>(v)].row(0)[lane] = a0[static_cast<std::size_t>(v)];
      for (int j = 1; j <= plan_.low; ++j)
        for (int v = 0; v < plan_.r; ++v) {
          vars_[static_cast<std::size_t>(v)].row(j)[lane] = static_cast<std::uint32_t>(rem % plan_.q);
          rem /= plan_.q;
        }
    }
  }

  // Row of the affine equation c_{i,k} = target, in the high unknowns.
  void build_row(int i, int k, std::size_t lane, std::uint32_t target) {
    std::fill(row_.begin(), row_.end(), 0U);
    const auto ui = static_cast<std::size_t>(i);
    for (int j = plan_.low + 1; j <= k; ++j)
      for (int v = 0; v < plan_.r; ++v)
        row_[static_cast<std::size_t>((j - plan_.low - 1) * plan_.r + v)] =
            derivs_[ui][static_cast<std::size_t>(v)].row(k - j)[lane];
    const std::uint32_t value = values_[ui].row(k)[lane];
    row_.back() = (target + plan_.q - value) % plan_.q;
  }

  void count_lane(std::size_t lane) {
    bool any_ok = true;
    bool one_ok = true;
    specials_.clear();
    for (int i = 0; i < plan_.ell; ++i) {
      const int ni = plan_.n[i];
      const SeriesBatch& val = values_[static_cast<std::size_t>(i)];
      const int top = std::min(ni, plan_.low);
      for (int k = 0; k <= top; ++k) {
        const std::uint32_t c = val.row(k)[lane];
        if (k < ni) {
          if (c != 0) return;
        } else {
          any_ok = any_ok && c != 0;
          one_ok = one_ok && c == 1;
        }
      }
      if (ni > plan_.low) specials_.push_back(i);
    }
    if (!any_ok && !one_ok) return;

    base_.clear();
    for (int i : specials_)
      for (int k = plan_.low + 1; k < plan_.n[i]; ++k) {
        build_row(i, k, lane, 0);
        if (!base_.add(row_.data())) return;
      }

    if (one_ok) {
      trial_ = base_;
      bool ok = true;
      for (int i : specials_) {
        build_row(i, plan_.n[i], lane, 1);
        if (!(ok = trial_.add(row_.data()))) break;
      }
      if (ok) ++tally.one[static_cast<std::size_t>(plan_.nv - trial_.rank())];
    }
    if (any_ok) {
      const unsigned subsets = 1U << specials_.size();
      for (unsigned mask = 0; mask < subsets; ++mask) {
        trial_ = base_;
        bool ok = true;
        for (std::size_t s = 0; s < specials_.size() && ok; ++s)
          if (mask & (1U << s)) {
            build_row(specials_[s], plan_.n[specials_[s]], lane, 0);
            ok = trial_.add(row_.data());
          }
        if (!ok) continue;
        const long sign = (__builtin_popcount(mask) % 2 == 0) ? 1 : -1;
        tally.any[static_cast<std::size_t>(plan_.nv - trial_.rank())] += sign;
      }
    }
  }

  const Plan& plan_;
  BatchEvaluator eval_;
  std::vector<SeriesBatch> vars_;
  std::vector<SeriesBatch> values_;
  std::vector<std::vector<SeriesBatch>> derivs_;
  Echelon base_;
  Echelon trial_;
  std::vector<std::uint32_t> row_;
  std::vector<int> specials_;
};

Integer weigh(const std::vector<long>& hist, unsigned q, int extra) {
  Integer total = 0;
  for (std::size_t e = 0; e < hist.size(); ++e)
    if (hist[e] != 0) total += Integer(hist[e]) * ipow(Integer(q), e + static_cast<unsigned long>(extra));
  return total;
}

}  // namespace

Integer arc_work_estimate(const PolySystem& sys, const MultiIndex& n, unsigned q,
                          const ArcConstraint& constraint) {
  validate(sys, n, q, constraint);
  const int r = sys.nvars();
  const int low = n.max_entry() / 2;
  const Integer scan = scan_cost(r, q, constraint);
  const Integer inner = ipow(Integer(q), static_cast<unsigned long>(r * low));
  if (scan > Integer(kScanLimit)) return scan + scan * inner;
  const Plan plan = make_plan(sys, n, q, constraint, scan + scan * inner);
  return scan + Integer(static_cast<unsigned long>(plan.a0.size())) * inner;
}

ArcCount count_arcs_both(const PolySystem& sys, const MultiIndex& n, unsigned q,
                         const ArcConstraint& constraint, const CountOptions& options) {
  const Plan plan = make_plan(sys, n, q, constraint, options.budget);
  const std::uint64_t units = (plan.lanes + kChunkLanes - 1) / kChunkLanes;
  const int workers = detail::worker_count(static_cast<std::size_t>(units), options.threads);
  std::vector<Worker> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(plan);
  detail::run_units(static_cast<std::size_t>(units), workers, [&](int w, std::size_t u) {
    const std::uint64_t begin = u * kChunkLanes;
    const std::uint64_t end = std::min<std::uint64_t>(plan.lanes, begin + kChunkLanes);
    pool[static_cast<std::size_t>(w)].run(begin, end);
  });
  std::vector<long> one(static_cast<std::size_t>(plan.nv) + 1, 0);
  std::vector<long> any(static_cast<std::size_t>(plan.nv) + 1, 0);
  for (const Worker& w : pool)
    for (std::size_t e = 0; e < one.size(); ++e) {
      one[e] += w.tally.one[e];
      any[e] += w.tally.any[e];
    }
  const int free_levels = plan.r * (plan.total - plan.nstar);
  return ArcCount{weigh(one, q, free_levels), weigh(any, q, free_levels)};
}

Integer count_arcs(const PolySystem& sys, const MultiIndex& n, unsigned q,
                   const ArcConstraint& constraint, Leading leading, const CountOptions& options) {
  for (int i = 0; i < n.size(); ++i)
    if (n[i] < 1) throw DomainError("orders n_i must be >= 1, got " + n.to_string());
  if (leading == Leading::one && sys.size() > 1)
    throw DomainError("leading coefficient one is defined for a single polynomial only");
  const ArcCount c = count_arcs_both(sys, n, q, constraint, options);
  return leading == Leading::one ? c.leading_one : c.all;
}

ArcCountTable count_table(const PolySystem& sys, unsigned q, int n_max,
                          const ArcConstraint& constraint, bool augmented,
                          const CountOptions& options) {
  if (n_max < 0) throw DomainError("order must be >= 0");
  ArcCountTable table;
  table.q = q;
  table.n_max = n_max;
  table.augmented = augmented;
  for (const MultiIndex& n : indices_up_to(sys.size(), n_max, augmented ? 0 : 1))
    table.entries.emplace(n, count_arcs_both(sys, n, q, constraint, options));
  return table;
}

TruncatedSeries<Rational> zeta_coeffs_from_counts(const ArcCountTable& table, int nvars,
                                                  Leading leading) {
  const int ell = table.entries.empty() ? 1 : table.entries.begin()->first.size();
  if (leading == Leading::one && ell > 1)
    throw DomainError("leading coefficient one is defined for a single polynomial only");
  TruncatedSeries<Rational> out(ell, table.n_max);
  for (const auto& [n, count] : table.entries) {
    const Integer& c = leading == Leading::one ? count.leading_one : count.all;
    out.add(n, Rational(c) * rpow(Rational(table.q), -static_cast<long>(n.total()) * nvars));
  }
  return out;
}

TruncatedSeries<Rational> zeta_coeffs_from_counts(const PolySystem& sys, unsigned q, int n_max,
                                                  const ArcConstraint& constraint,
                                                  Leading leading, bool augmented,
                                                  const CountOptions& options) {
  if (leading == Leading::one && sys.size() > 1)
    throw DomainError("leading coefficient one is defined for a single polynomial only");
  return zeta_coeffs_from_counts(count_table(sys, q, n_max, constraint, augmented, options),
                                 sys.nvars(), leading);
}

bool homogeneity_check(const PolySystem& sys, unsigned q, int n, const CountOptions& options) {
  if (sys.size() != 1 || !sys.homogeneous(0))
    throw DomainError("homogeneity check needs a single homogeneous polynomial");
  if (n < 1) throw DomainError("n must be >= 1");
  const int d = sys.degree(0);
  const int r = sys.nvars();
  const Integer lhs = count_arcs(sys, MultiIndex({n}), q, ArcConstraint::unconstrained(),
                                 Leading::one, options) *
                      ipow(Integer(q), static_cast<unsigned long>((d - 1) * r));
  const Integer rhs =
      count_arcs(sys, MultiIndex({n + d}), q, ArcConstraint::origin(), Leading::one, options);
  return lhs == rhs;
}

}  // namespace motzeta
