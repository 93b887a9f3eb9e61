#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankelcert/dense.hpp"
#include "hankelcert/hankel.hpp"

namespace hankelcert {

/// Explicit witness for the row-sum (Schur) test: strictly positive vectors
/// u, w on [0, range) with A u <= T w and A^T w <= T u entrywise.  For a
/// nonnegative symbol this certifies spectral norm <= T.  Checking rows
/// [0, range) with range >= effective_size covers the semi-infinite operator:
/// all remaining rows of A vanish, so any positive extension of u, w works.
struct SchurCertificate {
  std::vector<double> u;
  std::vector<double> w;
  double T = 0.0;
  std::size_t range = 0;
};

struct VerifyOptions {
  double ratio_slack = 1e-10;  // multiplicative tolerance on the row ratios
  double entry_tol = 1e-12;    // tolerance for entrywise factor identities
};

struct CertificateReport {
  bool ok = false;
  double worst_row_ratio = 0.0;  // max_m (Au)(m) / (T w(m)), both directions
  std::size_t worst_row = 0;
  double slack = 0.0;  // the tolerance the verdict used
};

struct FactorizationPair {
  Matrix B;
  Matrix C;
  double T = 0.0;
};

struct FactorizationReport {
  bool ok = false;
  double max_row_sum = 0.0;      // rows of B
  double max_col_sum = 0.0;      // columns of C
  double worst_entry_error = 0.0;  // |B.C - A.A| entrywise, scaled
  std::ptrdiff_t bad_row = -1;   // first entry failing B.C == A.A, if any
  std::ptrdiff_t bad_col = -1;
  double slack = 0.0;
};

/// Raised when the geometric series visibly fails to contract.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CertificateReport verify_certificate(const HankelOperator& H,
                                     const SchurCertificate& cert,
                                     const VerifyOptions& opts = {});

/// Entrywise split of the quadratic bound: B(m,n) = A(m,n) u(n) / w(m) and
/// C(m,n) = A(m,n) w(m) / u(n), so B .* C = A .* A exactly and the row/column
/// sums of B and C reproduce the certificate ratios.  T is set to the larger
/// of the two observed (1,inf) norms.
FactorizationPair rank_one_factors(const HankelOperator& H,
                                   const std::vector<double>& u,
                                   const std::vector<double>& w, std::size_t N);

/// Checks nonnegativity, the entrywise identity B .* C = A .* A, and the
/// row/column sum bounds against pair.T.
FactorizationReport verify_factorization(const HankelOperator& H,
                                         const FactorizationPair& pair,
                                         std::size_t N,
                                         const VerifyOptions& opts = {});

struct GeometricOptions {
  double increment_tol = 1e-14;  // stop when |increment|_inf < tol * |u|_inf
  std::size_t max_iter = 100000;
  bool check_norm = true;  // precheck T against a power-iteration estimate
};

/// u = sum_k (A/T)^k d for strictly positive d, truncated at N; satisfies
/// A u <= T u up to the series tail.  Throws DivergenceError when T is at or
/// below the truncated norm (power-iteration precheck, plus a runtime monitor
/// that trips after 50 consecutive non-decreasing increments).
std::vector<double> geometric_u(const HankelOperator& H,
                                const std::vector<double>& d, double T,
                                std::size_t N, const GeometricOptions& opts = {});

/// Certificate pair from geometric series run on A^T A and A A^T at level
/// T^2: u = T u_hat + A^T u_check, w = A u_hat + T u_check.  Verified before
/// returning.  For a Hankel operator A^T = A, so the two series coincide.
std::pair<std::vector<double>, std::vector<double>> asymmetric_uw(
    const HankelOperator& H, double T, std::size_t N,
    const std::vector<double>& d, const GeometricOptions& opts = {});

/// Sparse factorization for a lacunary symbol: B agrees with A_v on the main
/// diagonal; above it B carries the squared entries of A_v and below it the
/// 0/1 indicator of the antidiagonals m + n in K.  C = B^T.  T is set to
/// paley_row_bound(K, v).
FactorizationPair paley_factorization(const LacunarySet& K,
                                      const CoefficientSequence& v,
                                      std::size_t N);

/// Row-sum bound for that factorization: M + |v|_2 + |v|_2^2 with M the
/// dyadic count bound.  A strongly lacunary K sharpens it to
/// max(1, |v|_2) + |v|_2^2 (the indicator part has at most one entry per row
/// and excludes the diagonal term); the smaller of the two is returned.
double paley_row_bound(const LacunarySet& K, const CoefficientSequence& v);

}  // namespace hankelcert
