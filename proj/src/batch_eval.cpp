#include "motzeta/batch_eval.hpp"

#include <algorithm>
#include <utility>

namespace motzeta {

CompiledPolynomial::CompiledPolynomial(const Polynomial& f, int n, std::uint32_t mod)
    : nvars(n), modulus(mod), max_exponent(static_cast<std::size_t>(n), 0) {
  if (f.nvars() > n) throw DomainError("polynomial uses more variables than the batch provides");
  const Integer m(mod);
  for (const auto& [exps, c] : f.terms()) {
    Integer r = c % m;
    if (r < 0) r += m;
    if (r == 0) continue;
    Term t{static_cast<std::uint32_t>(r.get_ui()), {}};
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      t.powers.emplace_back(static_cast<int>(v), exps[v]);
      max_exponent[v] = std::max(max_exponent[v], exps[v]);
    }
    terms.push_back(std::move(t));
  }
}

std::uint32_t CompiledPolynomial::evaluate(const std::vector<std::uint32_t>& point) const {
  std::uint64_t acc = 0;
  for (const Term& t : terms) {
    std::uint64_t mono = t.coeff;
    for (auto [v, e] : t.powers)
      for (int k = 0; k < e; ++k) mono = mono * point[static_cast<std::size_t>(v)] % modulus;
    acc = (acc + mono) % modulus;
  }
  return static_cast<std::uint32_t>(acc);
}

void SeriesBatch::reset(int order, std::size_t lanes) {
  order_ = order;
  lanes_ = lanes;
  data_.assign(static_cast<std::size_t>(order + 1) * lanes, 0);
}

void SeriesBatch::clear() { std::fill(data_.begin(), data_.end(), 0U); }

BatchEvaluator::BatchEvaluator(int order, std::uint32_t modulus, const simd::KernelTable& kernels)
    : order_(order), mod_(modulus), kernels_(&kernels) {
  if (order < 0) throw DomainError("batch order must be >= 0");
}

void BatchEvaluator::multiply(const SeriesBatch& a, const SeriesBatch& b, SeriesBatch& out) const {
  out.clear();
  const std::size_t n = out.lanes();
  for (int k = 0; k <= out.order(); ++k)
    for (int i = 0; i <= k; ++i) kernels_->mul_add(out.row(k), a.row(i), b.row(k - i), n, mod_);
}

void BatchEvaluator::load(const std::vector<SeriesBatch>& vars,
                          const std::vector<int>& max_exponent) {
  lanes_ = vars.empty() ? 0 : vars.front().lanes();
  powers_.resize(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const SeriesBatch& x = vars[v];
    if (x.lanes() != lanes_ || x.order() < order_)
      throw DomainError("variable batches must share lanes and cover the evaluation order");
    const int top = v < max_exponent.size() ? max_exponent[v] : 0;
    auto& pw = powers_[v];
    pw.resize(static_cast<std::size_t>(std::max(top, 0)));
    for (int e = 1; e <= top; ++e) {
      SeriesBatch& dst = pw[static_cast<std::size_t>(e - 1)];
      if (dst.order() != order_ || dst.lanes() != lanes_) dst.reset(order_, lanes_);
      if (e == 1) {
        std::copy(x.row(0), x.row(0) + static_cast<std::size_t>(order_ + 1) * lanes_, dst.row(0));
      } else {
        multiply(pw[static_cast<std::size_t>(e - 2)], pw[0], dst);
      }
    }
  }
}

void BatchEvaluator::evaluate(const CompiledPolynomial& f, int out_order, SeriesBatch& out) {
  const int k_max = std::min(order_, out_order);
  if (out.order() != k_max || out.lanes() != lanes_) out.reset(k_max, lanes_);
  out.clear();
  if (scratch_a_.order() != k_max || scratch_a_.lanes() != lanes_) {
    scratch_a_.reset(k_max, lanes_);
    scratch_b_.reset(k_max, lanes_);
  }
  for (const auto& term : f.terms) {
    if (term.powers.empty()) {
      std::uint32_t* r0 = out.row(0);
      for (std::size_t i = 0; i < lanes_; ++i) r0[i] = mod_.reduce(r0[i] + term.coeff);
      continue;
    }
    const SeriesBatch* mono = nullptr;
    for (auto [v, e] : term.powers) {
      const SeriesBatch& p = powers_.at(static_cast<std::size_t>(v)).at(static_cast<std::size_t>(e - 1));
      if (mono == nullptr) {
        mono = &p;
        continue;
      }
      SeriesBatch& dst = mono == &scratch_a_ ? scratch_b_ : scratch_a_;
      multiply(*mono, p, dst);
      mono = &dst;
    }
    for (int k = 0; k <= k_max; ++k)
      kernels_->scale_add(out.row(k), mono->row(k), term.coeff, lanes_, mod_);
  }
}

}  // namespace motzeta
