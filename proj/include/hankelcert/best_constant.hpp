#pragma once

#include <cstddef>
#include <vector>

#include "hankelcert/coefficients.hpp"
#include "hankelcert/schur.hpp"
#include "hankelcert/sequences.hpp"

namespace hankelcert {

/// Weight vector from the contraction parameters: start with (c_0); at stage
/// J append c_J and multiply every earlier entry by (1 - c_J^2).  Requires
/// |c_j| < 1 for j >= 1 (c_0 = 1 selects the extremal eigenvalue case).
CoefficientSequence forward_v(const std::vector<double>& c);

/// Inverse transform: peel c_J = v_J and divide the earlier entries by
/// (1 - v_J^2).  When |v|_2 <= 1/sqrt(2) the recovered parameters satisfy
/// 0 <= c_j <= 1/sqrt(2) for nonnegative v; by default inputs outside that
/// ball are rejected, pass enforce_unit_ball = false to invert any v whose
/// peeling stays well defined (every intermediate |v_J| < 1).
std::vector<double> inverse_c(const CoefficientSequence& v,
                              bool enforce_unit_ball = true);

/// One stage of the excess recursion eps = |v|_2^2 - 1/2:
/// eps_J = |v_J|^4 / 2 + (1 - |v_J|^2)^2 eps_{J-1}.
double epsilon_step(double vJ, double eps_prev);

/// Parameters together with the weights they generate.
struct CTransformState {
  std::vector<double> c;
  CoefficientSequence v;
  std::size_t stage = 0;  // index J of the last appended parameter

  explicit CTransformState(std::vector<double> params)
      : c(std::move(params)), v(forward_v(c)), stage(c.empty() ? 0 : c.size() - 1) {}
};

/// Norm <= 1 certificate for A_{forward_v(c)} over a strongly lacunary set
/// containing 0 with interior parameters 0 < c_j < 1: the fold profile built
/// from c satisfies A u <= u entrywise.  Failure to verify is an internal
/// error (throws), not a data error.
SchurCertificate certified_norm_leq_one(const LacunarySet& K,
                                        const std::vector<double>& c);

/// The extremal case c_0 = 1: the profile restricted to the representable
/// frequencies is a fixed point, A_{forward_v(c)} u = u exactly.  Returns u
/// on [0, k_J] (zero at non-representable frequencies).
std::vector<double> exact_eigenvector(const LacunarySet& K,
                                      const std::vector<double>& c);

struct SharpnessRow {
  std::size_t J = 0;
  double l2 = 0.0;        // |forward_v(c)|_2 (closed form (J+2)/(2J+2) squared)
  double norm = 0.0;      // certified value 1, numerically confirmed when verified
  double ratio = 0.0;     // norm / l2, increasing to sqrt(2)
  bool verified = false;  // eigenvector residual + dense oracle ran at this size
  double residual = 0.0;  // |A u - u|_inf when verified, NaN otherwise
};

/// Ratio table for the family k_j = 2^j - 1, c_j = 1/sqrt(j+1), J = 0..J_max.
/// Rows whose truncation k_J + 1 fits within verify_truncation_limit carry a
/// numerically confirmed norm (fixed-point residual plus dense oracle); the
/// remaining rows report the certified norm 1, since the truncation size 2^J
/// grows beyond anything materializable.
std::vector<SharpnessRow> sharpness_table(std::size_t J_max,
                                          std::size_t verify_truncation_limit = 1024);

/// The set {2^j - 1 : 0 <= j <= J}; J <= 62 to stay within 64-bit range.
LacunarySet mersenne_prefix(std::size_t J);

}  // namespace hankelcert
