#include "hankelcert/schur.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hankelcert {

namespace {

void require_positive(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw std::invalid_argument(std::string(what) + ": empty vector");
  for (double x : v)
    if (!(x > 0.0))
      throw std::invalid_argument(std::string(what) + ": entries must be strictly positive");
}

void require_nonnegative_symbol(const HankelOperator& H, const char* what) {
  if (!H.coeffs().all_nonnegative())
    throw std::invalid_argument(std::string(what) +
                                ": symbol must be nonnegative for the row-sum test");
}

double linf(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Shared driver: u = sum_k apply^k(d) / T^k with the stopping and divergence
// rules of geometric_u.  `apply` must be a linear map on length-N vectors.
std::vector<double> geometric_series(
    const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
    const std::vector<double>& d, double T, const GeometricOptions& opts) {
  std::vector<double> u = d;
  std::vector<double> term = d;
  std::vector<double> next(d.size());
  double prev_inc = std::numeric_limits<double>::infinity();
  std::size_t non_decreasing = 0;
  for (std::size_t it = 0; it < opts.max_iter; ++it) {
    apply(term, next);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] /= T;
    term.swap(next);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += term[i];
    const double inc = linf(term);
    if (inc >= prev_inc) {
      if (++non_decreasing >= 50)
        throw DivergenceError(
            "geometric series diverges: 50 consecutive non-decreasing increments "
            "(T is at or below the operator norm)");
    } else {
      non_decreasing = 0;
    }
    prev_inc = inc;
    if (inc < opts.increment_tol * linf(u)) return u;
  }
  throw std::runtime_error(
      "geometric series did not reach the increment tolerance within max_iter");
}

}  // namespace

CertificateReport verify_certificate(const HankelOperator& H,
                                     const SchurCertificate& cert,
                                     const VerifyOptions& opts) {
  require_nonnegative_symbol(H, "verify_certificate");
  if (cert.T <= 0.0)
    throw std::invalid_argument("verify_certificate: T must be positive");
  if (cert.range < H.effective_size())
    throw std::invalid_argument(
        "verify_certificate: range must cover the nonzero rows of the operator");
  if (cert.u.size() != cert.range || cert.w.size() != cert.range)
    throw std::invalid_argument("verify_certificate: u, w must have length range");
  require_positive(cert.u, "verify_certificate u");
  require_positive(cert.w, "verify_certificate w");

  CertificateReport rep;
  rep.slack = opts.ratio_slack;
  const std::vector<double> Au = matvec(H, cert.u, cert.range);
  const std::vector<double> Aw = matvec(H, cert.w, cert.range);  // A^T = A
  for (std::size_t m = 0; m < cert.range; ++m) {
    const double r1 = Au[m] / (cert.T * cert.w[m]);
    const double r2 = Aw[m] / (cert.T * cert.u[m]);
    const double r = std::max(r1, r2);
    if (r > rep.worst_row_ratio) {
      rep.worst_row_ratio = r;
      rep.worst_row = m;
    }
  }
  rep.ok = rep.worst_row_ratio <= 1.0 + opts.ratio_slack;
  return rep;
}

FactorizationPair rank_one_factors(const HankelOperator& H,
                                   const std::vector<double>& u,
                                   const std::vector<double>& w, std::size_t N) {
  if (u.size() != N || w.size() != N)
    throw std::invalid_argument("rank_one_factors: u, w must have length N");
  require_positive(u, "rank_one_factors u");
  require_positive(w, "rank_one_factors w");

  FactorizationPair pair;
  pair.B = Matrix(N, N);
  pair.C = Matrix(N, N);
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      const double a = H.entry(m, n);
      if (a == 0.0) continue;
      pair.B(m, n) = a * u[n] / w[m];
      pair.C(m, n) = a * w[m] / u[n];
    }
  pair.T = std::max(pair.B.max_row_sum_abs(), pair.C.max_col_sum_abs());
  return pair;
}

FactorizationReport verify_factorization(const HankelOperator& H,
                                         const FactorizationPair& pair,
                                         std::size_t N,
                                         const VerifyOptions& opts) {
  if (pair.B.rows() != N || pair.B.cols() != N || pair.C.rows() != N ||
      pair.C.cols() != N)
    throw std::invalid_argument("verify_factorization: B, C must be N x N");
  if (pair.T <= 0.0)
    throw std::invalid_argument("verify_factorization: T must be positive");
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n)
      if (pair.B(m, n) < 0.0 || pair.C(m, n) < 0.0)
        throw std::invalid_argument("verify_factorization: negative factor entry");

  FactorizationReport rep;
  rep.slack = opts.ratio_slack;
  rep.ok = true;
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      const double a = H.entry(m, n);
      const double lhs = pair.B(m, n) * pair.C(m, n);
      const double err = std::abs(lhs - a * a) / std::max(1.0, a * a);
      if (err > rep.worst_entry_error) rep.worst_entry_error = err;
      if (err > opts.entry_tol && rep.bad_row < 0) {
        rep.bad_row = static_cast<std::ptrdiff_t>(m);
        rep.bad_col = static_cast<std::ptrdiff_t>(n);
      }
    }
  rep.max_row_sum = pair.B.max_row_sum_abs();
  rep.max_col_sum = pair.C.max_col_sum_abs();
  const double limit = pair.T * (1.0 + opts.ratio_slack);
  if (rep.bad_row >= 0) rep.ok = false;
  if (rep.max_row_sum > limit || rep.max_col_sum > limit) rep.ok = false;
  return rep;
}

std::vector<double> geometric_u(const HankelOperator& H,
                                const std::vector<double>& d, double T,
                                std::size_t N, const GeometricOptions& opts) {
  if (d.size() != N)
    throw std::invalid_argument("geometric_u: d must have length N");
  require_positive(d, "geometric_u d");
  if (T <= 0.0) throw std::invalid_argument("geometric_u: T must be positive");
  if (opts.check_norm) {
    const PowerResult pw = op_norm_power(H, N);
    if (T <= pw.value)
      throw DivergenceError(
          "geometric_u: T must exceed the truncated operator norm");
  }
  auto apply = [&H](const std::vector<double>& x, std::vector<double>& y) {
    y = matvec(H, x, x.size());
  };
  return geometric_series(apply, d, T, opts);
}

std::pair<std::vector<double>, std::vector<double>> asymmetric_uw(
    const HankelOperator& H, double T, std::size_t N,
    const std::vector<double>& d, const GeometricOptions& opts) {
  if (d.size() != N)
    throw std::invalid_argument("asymmetric_uw: d must have length N");
  require_positive(d, "asymmetric_uw d");
  if (T <= 0.0) throw std::invalid_argument("asymmetric_uw: T must be positive");
  if (opts.check_norm) {
    const PowerResult pw = op_norm_power(H, N);
    if (T <= pw.value)
      throw DivergenceError(
          "asymmetric_uw: T must exceed the truncated operator norm");
  }
  // Series for A^T A at level T^2.  A Hankel matrix is symmetric, so the
  // series for A A^T is identical and is reused for u_check.
  auto apply_gram = [&H](const std::vector<double>& x, std::vector<double>& y) {
    y = matvec(H, matvec(H, x, x.size()), x.size());
  };
  GeometricOptions series_opts = opts;
  series_opts.check_norm = false;
  const std::vector<double> u_hat =
      geometric_series(apply_gram, d, T * T, series_opts);
  const std::vector<double>& u_check = u_hat;

  const std::vector<double> A_u_hat = matvec(H, u_hat, N);
  const std::vector<double> A_u_check = matvec(H, u_check, N);
  std::vector<double> u(N), w(N);
  for (std::size_t i = 0; i < N; ++i) {
    u[i] = T * u_hat[i] + A_u_check[i];
    w[i] = A_u_hat[i] + T * u_check[i];
  }
  SchurCertificate cert{u, w, T, N};
  const CertificateReport rep = verify_certificate(H, cert);
  if (!rep.ok)
    throw std::runtime_error(
        "asymmetric_uw: constructed certificate failed verification");
  return {std::move(u), std::move(w)};
}

FactorizationPair paley_factorization(const LacunarySet& K,
                                      const CoefficientSequence& v,
                                      std::size_t N) {
  if (K.size() != v.size())
    throw std::invalid_argument(
        "paley_factorization: need exactly one weight per frequency");
  if (!v.all_nonnegative())
    throw std::invalid_argument("paley_factorization: weights must be nonnegative");
  const HankelOperator H = make_paley_hankel(K, v);
  if (N < H.effective_size())
    throw std::invalid_argument(
        "paley_factorization: N must cover the nonzero rows of the operator");

  FactorizationPair pair;
  pair.B = Matrix(N, N);
  for (std::size_t m = 0; m < N; ++m) {
    pair.B(m, m) = H.entry(m, m);
    for (std::size_t n = m + 1; n < N; ++n) {
      const double a = H.entry(m, n);
      pair.B(m, n) = a * a;
    }
    for (std::size_t n = 0; n < m; ++n)
      pair.B(m, n) = K.contains(static_cast<std::int64_t>(m + n)) ? 1.0 : 0.0;
  }
  pair.C = pair.B.transposed();
  pair.T = paley_row_bound(K, v);
  return pair;
}

double paley_row_bound(const LacunarySet& K, const CoefficientSequence& v) {
  if (K.size() != v.size())
    throw std::invalid_argument(
        "paley_row_bound: need exactly one weight per frequency");
  if (!v.all_nonnegative())
    throw std::invalid_argument("paley_row_bound: weights must be nonnegative");
  const double l2 = v.l2_norm();
  const double M = static_cast<double>(dyadic_count_bound(K));
  double bound = M + l2 + l2 * l2;
  if (is_strongly_lacunary(K)) {
    // At most one indicator entry per row, and when it is present the
    // diagonal term of that row vanishes.
    bound = std::min(bound, std::max(1.0, l2) + l2 * l2);
  }
  return bound;
}

}  // namespace hankelcert
