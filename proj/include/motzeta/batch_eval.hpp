#pragma once

// Evaluation of integer polynomials on many truncated power series at once,
// modulo a small modulus. Data is laid out coefficient-major so every inner
// loop is a lane-parallel kernel call. Order 0 is plain point evaluation.

#include <cstdint>
#include <vector>

#include "motzeta/polynomial.hpp"
#include "motzeta/simd/kernels.hpp"

namespace motzeta {

/// A polynomial with coefficients reduced modulo a kernel modulus.
struct CompiledPolynomial {
  struct Term {
    std::uint32_t coeff;
    /// (0-based variable, exponent >= 1) pairs.
    std::vector<std::pair<int, int>> powers;
  };

  int nvars = 0;
  std::uint32_t modulus = 0;
  std::vector<Term> terms;
  /// Largest exponent of each variable over all terms.
  std::vector<int> max_exponent;

  CompiledPolynomial() = default;
  CompiledPolynomial(const Polynomial& f, int nvars, std::uint32_t modulus);

  bool is_zero() const { return terms.empty(); }
  /// Scalar reference evaluation at one point (entries already reduced).
  std::uint32_t evaluate(const std::vector<std::uint32_t>& point) const;
};

/// Rows 0..order, each holding one coefficient for every lane.
class SeriesBatch {
 public:
  SeriesBatch() = default;
  SeriesBatch(int order, std::size_t lanes) { reset(order, lanes); }

  void reset(int order, std::size_t lanes);
  void clear();

  int order() const { return order_; }
  std::size_t lanes() const { return lanes_; }
  std::uint32_t* row(int k) { return data_.data() + static_cast<std::size_t>(k) * lanes_; }
  const std::uint32_t* row(int k) const {
    return data_.data() + static_cast<std::size_t>(k) * lanes_;
  }

 private:
  int order_ = -1;
  std::size_t lanes_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Powers x_v^e (1 <= e <= max_exponent[v]) of a batch of series, truncated
/// at a common order, shared by every polynomial evaluated on the batch.
class BatchEvaluator {
 public:
  BatchEvaluator(int order, std::uint32_t modulus, const simd::KernelTable& kernels);

  int order() const { return order_; }
  const simd::Modulus& modulus() const { return mod_; }
  const simd::KernelTable& kernels() const { return *kernels_; }

  /// `vars` must hold one batch per variable, each of order >= order().
  void load(const std::vector<SeriesBatch>& vars, const std::vector<int>& max_exponent);

  /// out = f(vars) truncated at min(order(), out_order).
  void evaluate(const CompiledPolynomial& f, int out_order, SeriesBatch& out);

  /// out = a * b truncated at out.order().
  void multiply(const SeriesBatch& a, const SeriesBatch& b, SeriesBatch& out) const;

 private:
  int order_;
  simd::Modulus mod_;
  const simd::KernelTable* kernels_;
  std::size_t lanes_ = 0;
  std::vector<std::vector<SeriesBatch>> powers_;
  SeriesBatch scratch_a_;
  SeriesBatch scratch_b_;
};

}  // namespace motzeta
