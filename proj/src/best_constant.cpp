#include "hankelcert/best_constant.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hankelcert/folding.hpp"
#include "hankelcert/hankel.hpp"

namespace hankelcert {

CoefficientSequence forward_v(const std::vector<double>& c) {
  std::vector<double> v;
  v.reserve(c.size());
  for (std::size_t J = 0; J < c.size(); ++J) {
    if (J >= 1 && !(std::abs(c[J]) < 1.0))
      throw std::invalid_argument("forward_v: |c_j| < 1 required for j >= 1");
    const double shrink = 1.0 - c[J] * c[J];
    if (J >= 1)
      for (double& e : v) e *= shrink;
    v.push_back(c[J]);
  }
  return CoefficientSequence(std::move(v));
}

std::vector<double> inverse_c(const CoefficientSequence& v, bool enforce_unit_ball) {
  const double l2 = v.l2_norm();
  if (enforce_unit_ball && l2 > 1.0 / std::sqrt(2.0) + 1e-12)
    throw std::invalid_argument(
        "inverse_c: |v|_2 must not exceed 1/sqrt(2); pass enforce_unit_ball = "
        "false to invert anyway");
  std::vector<double> work = v.values();
  std::vector<double> c(work.size(), 0.0);
  for (std::size_t j = work.size(); j-- > 1;) {
    const double cj = work[j];
    const double shrink = 1.0 - cj * cj;
    if (!(shrink > 0.0))
      throw std::invalid_argument("inverse_c: peeling requires |v_J| < 1");
    c[j] = cj;
    for (std::size_t i = 0; i < j; ++i) work[i] /= shrink;
  }
  if (!work.empty()) c[0] = work[0];
  return c;
}

double epsilon_step(double vJ, double eps_prev) {
  const double v2 = vJ * vJ;
  return 0.5 * v2 * v2 + (1.0 - v2) * (1.0 - v2) * eps_prev;
}

SchurCertificate certified_norm_leq_one(const LacunarySet& K,
                                        const std::vector<double>& c) {
  if (!K.contains_zero())
    throw std::invalid_argument("certified_norm_leq_one: set must contain 0");
  if (!is_strongly_lacunary(K))
    throw std::invalid_argument(
        "certified_norm_leq_one: set must be strongly lacunary");
  if (c.size() != K.size())
    throw std::invalid_argument(
        "certified_norm_leq_one: need exactly one parameter per frequency");
  for (double cj : c)
    if (!(cj > 0.0 && cj < 1.0))
      throw std::invalid_argument(
          "certified_norm_leq_one: parameters must satisfy 0 < c_j < 1");

  const CoefficientSequence v = forward_v(c);
  const HankelOperator A = make_paley_hankel(K, v);
  const FoldProfile prof = fold_u(K, CoefficientSequence(c));
  const std::size_t N = static_cast<std::size_t>(K.max_index()) + 1;

  SchurCertificate cert{prof.u, prof.u, 1.0, N};
  const CertificateReport rep = verify_certificate(A, cert);
  if (!rep.ok)
    throw std::runtime_error(
        "certified_norm_leq_one: fold certificate failed verification "
        "(internal error)");
  return cert;
}

std::vector<double> exact_eigenvector(const LacunarySet& K,
                                      const std::vector<double>& c) {
  if (!K.contains_zero())
    throw std::invalid_argument("exact_eigenvector: set must contain 0");
  if (!is_strongly_lacunary(K))
    throw std::invalid_argument("exact_eigenvector: set must be strongly lacunary");
  if (c.size() != K.size())
    throw std::invalid_argument(
        "exact_eigenvector: need exactly one parameter per frequency");
  if (c.empty() || c[0] != 1.0)
    throw std::invalid_argument("exact_eigenvector: c_0 = 1 is required");

  const CoefficientSequence weights((std::vector<double>(c)));
  const std::int64_t kJ = K.max_index();
  std::vector<double> u(static_cast<std::size_t>(kJ) + 1, 0.0);
  for (std::int64_t k = 0; k <= kJ; ++k) {
    const auto val = product_formula_u(K, weights, k);
    if (val) u[static_cast<std::size_t>(k)] = *val;
  }
  return u;
}

LacunarySet mersenne_prefix(std::size_t J) {
  if (J > 62)
    throw std::invalid_argument("mersenne_prefix: 2^J - 1 exceeds 64-bit range");
  std::vector<std::int64_t> ks(J + 1);
  for (std::size_t j = 0; j <= J; ++j)
    ks[j] = (std::int64_t(1) << j) - 1;
  return LacunarySet(std::move(ks));
}

std::vector<SharpnessRow> sharpness_table(std::size_t J_max,
                                          std::size_t verify_truncation_limit) {
  std::vector<SharpnessRow> rows;
  rows.reserve(J_max + 1);
  std::vector<double> c;
  for (std::size_t J = 0; J <= J_max; ++J) {
    c.push_back(1.0 / std::sqrt(static_cast<double>(J + 1)));
    const CoefficientSequence v = forward_v(c);

    SharpnessRow row;
    row.J = J;
    row.l2 = v.l2_norm();
    row.residual = std::numeric_limits<double>::quiet_NaN();
    const bool representable = J < 63;
    if (representable &&
        (std::uint64_t(1) << J) <= verify_truncation_limit) {
      const LacunarySet K = mersenne_prefix(J);
      const HankelOperator A = make_paley_hankel(K, v);
      const std::vector<double> u = exact_eigenvector(K, c);
      const std::size_t N = static_cast<std::size_t>(K.max_index()) + 1;
      const std::vector<double> Au = matvec(A, u, N);
      double res = 0.0;
      for (std::size_t i = 0; i < N; ++i)
        res = std::max(res, std::abs(Au[i] - u[i]));
      row.residual = res;
      row.norm = op_norm_oracle(truncate(A, N));
      row.verified = true;
    } else {
      row.norm = 1.0;  // certified by the fold fixed point at every level
      row.verified = false;
    }
    row.ratio = row.norm / row.l2;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hankelcert
