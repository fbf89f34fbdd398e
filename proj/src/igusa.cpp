#include <algorithm>
#include <cstdint>
#include <vector>

#include "motzeta/arcs.hpp"
#include "motzeta/batch_eval.hpp"
#include "parallel.hpp"

// Solutions of f(x) = 0 mod p^n with ord_p f(x) = n, over x mod p^{n+1}.
// The p-adic digits of x are enumerated depth first, p^m children per batch,
// keeping only prefixes with f(x) = 0 mod p^{k+1}. The last digit a_n enters
// linearly: f(x + p^n a) = f(x) + p^n grad f(x) . a mod p^{n+1} for n >= 1.

namespace motzeta {

namespace {

struct IgusaPlan {
  int m = 0;
  std::uint32_t p = 0;
  int n = 0;
  std::uint32_t modulus = 0;  // p^{n+1}
  std::uint32_t top = 0;      // p^n
  CompiledPolynomial f;
  std::vector<CompiledPolynomial> grad;  // mod p
  std::size_t children = 0;              // p^m
  Integer fibre;                         // p^m
  Integer fibre_minus_hyperplane;        // p^m - p^{m-1}
};

class IgusaWorker {
 public:
  explicit IgusaWorker(const IgusaPlan& plan)
      : plan_(plan), eval_(0, plan.modulus, simd::active_kernels()) {
    vars_.resize(static_cast<std::size_t>(plan.m));
    levels_.resize(static_cast<std::size_t>(plan.n + 1));
  }

  /// Extends the prefix x (known mod p^k) by one digit and recurses.
  void expand(const std::vector<std::uint32_t>& x, int k) {
    const std::size_t lanes = plan_.children;
    for (auto& v : vars_)
      if (v.lanes() != lanes) v.reset(0, lanes);
    std::uint32_t weight = 1;
    for (int i = 0; i < k; ++i) weight *= plan_.p;
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      std::size_t rem = lane;
      for (int v = 0; v < plan_.m; ++v) {
        const auto digit = static_cast<std::uint32_t>(rem % plan_.p);
        rem /= plan_.p;
        vars_[static_cast<std::size_t>(v)].row(0)[lane] = x[static_cast<std::size_t>(v)] + weight * digit;
      }
    }
    std::vector<int> max_exp(plan_.f.max_exponent);
    eval_.load(vars_, max_exp);
    SeriesBatch& values = levels_[static_cast<std::size_t>(k)];
    eval_.evaluate(plan_.f, 0, values);
    const std::uint32_t need = weight * plan_.p;  // p^{k+1}
    std::vector<std::vector<std::uint32_t>> survivors;
    std::vector<std::uint32_t> residues;
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      const std::uint32_t value = values.row(0)[lane];
      if (value % need != 0) continue;
      std::vector<std::uint32_t> point(static_cast<std::size_t>(plan_.m));
      for (int v = 0; v < plan_.m; ++v) point[static_cast<std::size_t>(v)] = vars_[static_cast<std::size_t>(v)].row(0)[lane];
      survivors.push_back(std::move(point));
      residues.push_back(value);
    }
    if (k + 1 == plan_.n) {
      for (std::size_t s = 0; s < survivors.size(); ++s) finish(survivors[s], residues[s]);
      return;
    }
    for (const auto& point : survivors) expand(point, k + 1);
  }

  void finish(const std::vector<std::uint32_t>& x, std::uint32_t value) {
    const std::uint32_t u = value / plan_.top;
    std::vector<std::uint32_t> reduced(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) reduced[v] = x[v] % plan_.p;
    bool gradient_zero = true;
    for (const auto& g : plan_.grad)
      if (g.evaluate(reduced) != 0) {
        gradient_zero = false;
        break;
      }
    if (!gradient_zero)
      total += plan_.fibre_minus_hyperplane;
    else if (u != 0)
      total += plan_.fibre;
  }

  Integer total = 0;

 private:
  const IgusaPlan& plan_;
  BatchEvaluator eval_;
  std::vector<SeriesBatch> vars_;
  std::vector<SeriesBatch> levels_;
};

}  // namespace

Integer igusa_count(const Polynomial& f, int nvars, unsigned p, int n, const CountOptions& options) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (n < 0) throw DomainError("n must be >= 0");
  if (nvars < 1 || f.nvars() > nvars) throw DomainError("polynomial has more variables than declared");
  bool unit_content = false;
  for (const auto& [e, c] : f.terms())
    if (c % Integer(p) != 0) unit_content = true;
  if (!unit_content) throw DomainError("f vanishes identically mod p");

  const Integer modulus = ipow(Integer(p), static_cast<unsigned long>(n + 1));
  if (modulus >= Integer(simd::kMaxModulus))
    throw DomainError("p^(n+1) must be below 2^15 for the Igusa counter");
  const Integer estimate = ipow(Integer(p), static_cast<unsigned long>(nvars * std::max(n, 1)));
  if (estimate > options.budget) throw BudgetExceeded("p-adic enumeration exceeds budget", estimate);

  IgusaPlan plan;
  plan.m = nvars;
  plan.p = p;
  plan.n = n;
  plan.modulus = static_cast<std::uint32_t>(modulus.get_ui());
  plan.top = plan.modulus / p;
  plan.f = CompiledPolynomial(f, nvars, plan.modulus);
  plan.fibre = ipow(Integer(p), static_cast<unsigned long>(nvars));
  plan.fibre_minus_hyperplane = plan.fibre - plan.fibre / p;
  plan.children = static_cast<std::size_t>(plan.fibre.get_ui());
  for (int v = 1; v <= nvars; ++v) plan.grad.emplace_back(f.with_nvars(nvars).derivative(v), nvars, p);

  if (n == 0) {
    const CompiledPolynomial fp(f, nvars, p);
    BatchEvaluator eval(0, p, simd::active_kernels());
    std::vector<SeriesBatch> vars(static_cast<std::size_t>(nvars), SeriesBatch(0, plan.children));
    for (std::size_t lane = 0; lane < plan.children; ++lane) {
      std::size_t rem = lane;
      for (auto& v : vars) {
        v.row(0)[lane] = static_cast<std::uint32_t>(rem % p);
        rem /= p;
      }
    }
    eval.load(vars, fp.max_exponent);
    SeriesBatch values;
    eval.evaluate(fp, 0, values);
    const std::size_t zeros = eval.kernels().count_equal(values.row(0), 0, plan.children);
    return plan.fibre - Integer(static_cast<unsigned long>(zeros));
  }

  // Level 0 in one batch; deeper levels are independent work units.
  IgusaWorker root(plan);
  const std::vector<std::uint32_t> origin(static_cast<std::size_t>(nvars), 0);
  if (n == 1) {
    root.expand(origin, 0);
    return root.total;
  }
  std::vector<std::vector<std::uint32_t>> firsts;
  {
    BatchEvaluator eval(0, plan.modulus, simd::active_kernels());
    std::vector<SeriesBatch> vars(static_cast<std::size_t>(nvars), SeriesBatch(0, plan.children));
    for (std::size_t lane = 0; lane < plan.children; ++lane) {
      std::size_t rem = lane;
      for (auto& v : vars) {
        v.row(0)[lane] = static_cast<std::uint32_t>(rem % p);
        rem /= p;
      }
    }
    eval.load(vars, plan.f.max_exponent);
    SeriesBatch values;
    eval.evaluate(plan.f, 0, values);
    for (std::size_t lane = 0; lane < plan.children; ++lane) {
      if (values.row(0)[lane] % p != 0) continue;
      std::vector<std::uint32_t> point;
      for (const auto& v : vars) point.push_back(v.row(0)[lane]);
      firsts.push_back(std::move(point));
    }
  }
  const int workers = detail::worker_count(firsts.size(), options.threads);
  std::vector<IgusaWorker> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(plan);
  detail::run_units(firsts.size(), workers,
                    [&](int w, std::size_t u) { pool[static_cast<std::size_t>(w)].expand(firsts[u], 1); });
  Integer total = 0;
  for (const auto& w : pool) total += w.total;
  return total;
}

TruncatedSeries<Rational> igusa_coeffs(const Polynomial& f, int nvars, unsigned p, int n_max,
                                       const CountOptions& options) {
  TruncatedSeries<Rational> out(1, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Integer count = igusa_count(f, nvars, p, n, options);
    out.add(MultiIndex({n}), Rational(count) * rpow(Rational(p), -static_cast<long>(nvars) * (n + 1)));
  }
  return out;
}

}  // namespace motzeta
