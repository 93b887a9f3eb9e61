#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hankelcert/coefficients.hpp"
#include "hankelcert/dense.hpp"
#include "hankelcert/sequences.hpp"

namespace hankelcert {

/// Semi-infinite symmetric matrix A(m, n) = a(m + n) generated by a finitely
/// supported symbol a.  Entries are materialized lazily; the nonzero support
/// of the symbol is cached for sparse antidiagonal traversal.
class HankelOperator {
public:
  explicit HankelOperator(CoefficientSequence a);

  const CoefficientSequence& coeffs() const { return coeffs_; }

  /// Rows/columns at or beyond this index are identically zero:
  /// support_max(a) + 1, and 0 for the zero symbol.
  std::size_t effective_size() const { return effective_size_; }

  double entry(std::size_t m, std::size_t n) const { return coeffs_[m + n]; }

  /// Nonzero symbol entries as (index, value), ascending by index.
  const std::vector<std::pair<std::int64_t, double>>& support() const {
    return support_;
  }

private:
  CoefficientSequence coeffs_;
  std::vector<std::pair<std::int64_t, double>> support_;
  std::size_t effective_size_ = 0;
};

HankelOperator make_hankel(CoefficientSequence a);

/// Hankel matrix of the symbol a_v with a_v(k_j) = v_j and zero off K.
/// v must supply exactly one weight per element of K.
HankelOperator make_paley_hankel(const LacunarySet& K, const CoefficientSequence& v);

/// y(m) = sum_n a(m+n) x(n) for 0 <= m < n_out, traversing the antidiagonals
/// of the symbol support (cost ~ nnz(a) * len(x)).
std::vector<double> matvec(const HankelOperator& H, const std::vector<double>& x,
                           std::size_t n_out);

/// Same product computed through an explicit convolution with the reversed
/// input; alternative path for dense symbols, used as a cross-check.
std::vector<double> matvec_convolution(const HankelOperator& H,
                                       const std::vector<double>& x,
                                       std::size_t n_out);

/// sum_{m,n} a(m+n) g(m) h(n).
double bilinear(const HankelOperator& H, const std::vector<double>& g,
                const std::vector<double>& h);

/// Dense leading N x N section.
Matrix truncate(const HankelOperator& H, std::size_t N);

struct PowerOptions {
  double tol = 1e-10;        // relative residual target for the Gram iterate
  std::size_t max_iter = 0;  // 0 selects 100 * N
  std::uint64_t seed = 20240901;  // perturbation seed; fixed for reproducibility
};

struct PowerResult {
  double value = 0.0;     // spectral norm estimate (never above the true norm)
  double residual = 0.0;  // |H^2 x - nu x|_2 at the reported iterate
  std::size_t iterations = 0;
  bool converged = false;
};

/// Power iteration for the spectral norm of the N x N truncation.  The
/// iteration runs on H^2 (symmetric positive semidefinite), which also
/// handles +/- eigenvalue pairs; the start vector is all ones plus a small
/// seeded perturbation.  Non-convergence is reported, never silently
/// accepted: inspect PowerResult::converged and ::residual.
PowerResult op_norm_power(const HankelOperator& H, std::size_t N,
                          const PowerOptions& opts = {});

/// Spectral norm of a square dense matrix by a route independent of power
/// iteration: Householder tridiagonalization of M^T M followed by bisection
/// (Sturm counts) for the largest eigenvalue.
double op_norm_oracle(const Matrix& M);

}  // namespace hankelcert
