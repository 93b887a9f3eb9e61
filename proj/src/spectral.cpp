#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hankelcert/hankel.hpp"

namespace hankelcert {

namespace {

// Reduce a symmetric matrix (overwritten) to tridiagonal form with
// Householder reflections.  On return diag holds the diagonal and off[i]
// (1 <= i < n) the subdiagonal coupling rows i-1 and i.
void householder_tridiagonalize(Matrix& A, std::vector<double>& diag,
                                std::vector<double>& off) {
  const std::size_t n = A.rows();
  diag.assign(n, 0.0);
  off.assign(n, 0.0);
  if (n == 0) return;

  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += A(i, k) * A(i, k);
    if (norm2 == 0.0) {
      off[k + 1] = 0.0;
      continue;
    }
    const double norm = std::sqrt(norm2);
    const double alpha = A(k + 1, k) > 0.0 ? -norm : norm;
    const double vtv = 2.0 * (norm2 - alpha * A(k + 1, k));
    off[k + 1] = alpha;
    if (vtv == 0.0) continue;  // column already in the desired form
    const double h = 0.5 * vtv;

    std::fill(v.begin(), v.end(), 0.0);
    v[k + 1] = A(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = A(i, k);

    // p = A v / h over the trailing block, then the rank-two update
    // A <- A - v q^T - q v^T with q = p - (v^T p / 2h) v.
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += A(i, j) * v[j];
      p[i] = s / h;
    }
    double vtp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vtp += v[i] * p[i];
    const double mu = vtp / (2.0 * h);
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= mu * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j <= i; ++j) {
        double upd = A(i, j) - v[i] * p[j] - p[i] * v[j];
        A(i, j) = upd;
        A(j, i) = upd;
      }
    A(k + 1, k) = alpha;
    A(k, k + 1) = alpha;
  }
  if (n >= 2) off[n - 1] = A(n - 1, n - 2);
  for (std::size_t i = 0; i < n; ++i) diag[i] = A(i, i);
}

// Number of eigenvalues of the tridiagonal matrix strictly below x
// (negative pivots of the LDL^T factorization of T - xI).
std::size_t sturm_count_below(const std::vector<double>& diag,
                              const std::vector<double>& off, double x,
                              double pivmin) {
  const std::size_t n = diag.size();
  std::size_t count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    q = diag[i] - x - off[i] * off[i] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

double largest_eigenvalue_tridiag(const std::vector<double>& diag,
                                  const std::vector<double>& off) {
  const std::size_t n = diag.size();
  if (n == 0) return 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double max_off2 = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::abs(off[i]) + (i + 1 < n ? std::abs(off[i + 1]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
    max_off2 = std::max(max_off2, off[i] * off[i]);
  }
  const double pivmin = std::numeric_limits<double>::min() * max_off2;
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  const double gershgorin_hi = hi;  // true upper bound, kept for the clamp
  hi += scale * 1e-14;  // Gershgorin bound can sit exactly on the eigenvalue
  while (sturm_count_below(diag, off, hi, pivmin) < n) hi += std::max(1.0, scale);

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-14 * scale || mid == lo || mid == hi) break;
    if (sturm_count_below(diag, off, mid, pivmin) == n)
      hi = mid;
    else
      lo = mid;
  }
  // The bisection interval never narrows below 1e-14 * scale, an absolute
  // floor that matters when the true eigenvalue is near zero (the square
  // root downstream turns it into ~1e-7).  Clamping with the pre-padding
  // Gershgorin bound cannot undershoot and removes the floor exactly where
  // it hurts.
  return std::min(0.5 * (lo + hi), gershgorin_hi);
}

}  // namespace

double op_norm_oracle(const Matrix& M) {
  if (M.rows() != M.cols())
    throw std::invalid_argument("op_norm_oracle: matrix must be square");
  const std::size_t n = M.rows();
  if (n == 0) return 0.0;

  // Gram matrix G = M^T M; the norm is sqrt of its largest eigenvalue.
  Matrix G(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const double m_ki = M(k, i);
      if (m_ki == 0.0) continue;
      for (std::size_t j = i; j < n; ++j) G(i, j) += m_ki * M(k, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) G(i, j) = G(j, i);

  std::vector<double> diag, off;
  householder_tridiagonalize(G, diag, off);
  const double lambda = largest_eigenvalue_tridiag(diag, off);
  return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace hankelcert
