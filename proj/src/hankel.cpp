#include "hankelcert/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hankelcert {

HankelOperator::HankelOperator(CoefficientSequence a) : coeffs_(std::move(a)) {
  std::ptrdiff_t last = coeffs_.support_max();
  effective_size_ = last < 0 ? 0 : static_cast<std::size_t>(last) + 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0.0)
      support_.emplace_back(static_cast<std::int64_t>(i), coeffs_[i]);
}

HankelOperator make_hankel(CoefficientSequence a) {
  return HankelOperator(std::move(a));
}

HankelOperator make_paley_hankel(const LacunarySet& K, const CoefficientSequence& v) {
  if (K.size() != v.size())
    throw std::invalid_argument(
        "make_paley_hankel: need exactly one weight per frequency");
  std::size_t len = K.empty() ? 0 : static_cast<std::size_t>(K.max_index()) + 1;
  std::vector<double> a(len, 0.0);
  for (std::size_t j = 0; j < K.size(); ++j)
    a[static_cast<std::size_t>(K[j])] = v[j];
  return HankelOperator(CoefficientSequence(std::move(a)));
}

namespace {

// y(m) += sum_n a(m+n) x(n) over the symbol support; y must be sized n_out.
void apply_into(const HankelOperator& H, const std::vector<double>& x,
                std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  const std::int64_t n_out = static_cast<std::int64_t>(y.size());
  const std::int64_t len_x = static_cast<std::int64_t>(x.size());
  for (const auto& [s, value] : H.support()) {
    const std::int64_t n_lo = std::max<std::int64_t>(0, s - (n_out - 1));
    const std::int64_t n_hi = std::min<std::int64_t>(len_x - 1, s);
    for (std::int64_t n = n_lo; n <= n_hi; ++n)
      y[static_cast<std::size_t>(s - n)] += value * x[static_cast<std::size_t>(n)];
  }
}

}  // namespace

std::vector<double> matvec(const HankelOperator& H, const std::vector<double>& x,
                           std::size_t n_out) {
  std::vector<double> y(n_out, 0.0);
  apply_into(H, x, y);
  return y;
}

std::vector<double> matvec_convolution(const HankelOperator& H,
                                       const std::vector<double>& x,
                                       std::size_t n_out) {
  // y(m) = conv(a, reverse(x))(m + len(x) - 1).
  const std::size_t L = x.size();
  std::vector<double> y(n_out, 0.0);
  if (L == 0) return y;
  const std::size_t la = H.coeffs().size();
  std::vector<double> rx(x.rbegin(), x.rend());
  std::vector<double> z(la + L - 1, 0.0);
  for (std::size_t i = 0; i < la; ++i) {
    double ai = H.coeffs()[i];
    if (ai == 0.0) continue;
    for (std::size_t k = 0; k < L; ++k) z[i + k] += ai * rx[k];
  }
  for (std::size_t m = 0; m < n_out; ++m) {
    std::size_t t = m + L - 1;
    y[m] = t < z.size() ? z[t] : 0.0;
  }
  return y;
}

double bilinear(const HankelOperator& H, const std::vector<double>& g,
                const std::vector<double>& h) {
  // sum_s a(s) * [conv(g, h)](s), evaluated only at the support of a.
  double total = 0.0;
  const std::int64_t lg = static_cast<std::int64_t>(g.size());
  const std::int64_t lh = static_cast<std::int64_t>(h.size());
  for (const auto& [s, value] : H.support()) {
    const std::int64_t m_lo = std::max<std::int64_t>(0, s - (lh - 1));
    const std::int64_t m_hi = std::min<std::int64_t>(lg - 1, s);
    double conv = 0.0;
    for (std::int64_t m = m_lo; m <= m_hi; ++m)
      conv += g[static_cast<std::size_t>(m)] * h[static_cast<std::size_t>(s - m)];
    total += value * conv;
  }
  return total;
}

Matrix truncate(const HankelOperator& H, std::size_t N) {
  Matrix M(N, N);
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) M(m, n) = H.entry(m, n);
  return M;
}

PowerResult op_norm_power(const HankelOperator& H, std::size_t N,
                          const PowerOptions& opts) {
  PowerResult res;
  if (N == 0) {
    res.converged = true;
    return res;
  }
  const std::size_t max_iter = opts.max_iter != 0 ? opts.max_iter : 100 * N;

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> x(N);
  for (double& xi : x) xi = 1.0 + 1e-3 * unit(rng);
  double nx = 0.0;
  for (double xi : x) nx += xi * xi;
  nx = std::sqrt(nx);
  for (double& xi : x) xi /= nx;

  std::vector<double> z(N), w(N);
  double nu = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    apply_into(H, x, z);  // z = H x
    apply_into(H, z, w);  // w = H^2 x
    nu = 0.0;
    for (std::size_t i = 0; i < N; ++i) nu += x[i] * w[i];
    double rnorm = 0.0, wnorm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      double r = w[i] - nu * x[i];
      rnorm += r * r;
      wnorm += w[i] * w[i];
    }
    rnorm = std::sqrt(rnorm);
    wnorm = std::sqrt(wnorm);
    res.iterations = it;
    res.residual = rnorm;
    if (wnorm == 0.0) {  // x in the kernel of H^2: the truncation annihilates it
      res.value = 0.0;
      res.converged = true;
      return res;
    }
    if (rnorm <= opts.tol * std::max(nu, std::numeric_limits<double>::min())) {
      res.value = std::sqrt(std::max(nu, 0.0));
      res.converged = true;
      return res;
    }
    for (std::size_t i = 0; i < N; ++i) x[i] = w[i] / wnorm;
  }
  res.value = std::sqrt(std::max(nu, 0.0));
  res.converged = false;
  return res;
}

}  // namespace hankelcert
