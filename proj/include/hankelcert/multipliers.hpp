#pragma once

#include <cstdint>

#include "hankelcert/coefficients.hpp"
#include "hankelcert/schur.hpp"

namespace hankelcert {

/// sup over dyadic blocks [2^j, 2^{j+1}), j >= 0, of the block l2 norm
/// squared of |a|.  The entry a(0) belongs to no block.
double cond_supsum2(const CoefficientSequence& a);

/// sum over dyadic blocks of the squared block l1 norms of |a|.
double cond_sumsquaresum(const CoefficientSequence& a);

/// sup over window lengths 1 <= M <= M_max of
/// sum_{j >= 1} (sum_{jM <= n < (j+1)M} |a(n)|)^2.  M_max = 0 selects
/// support_max(a) + 1; larger windows contribute nothing because their first
/// block already clears the support.
double cond_supdouble(const CoefficientSequence& a, std::int64_t M_max = 0);

/// Column-scaled factorization of H_a for strictly positive symbols: B agrees
/// with H_a on the diagonal, columns above the diagonal are multiplied by the
/// forward sums S(n) = sum_{n <= r < 2n} a(r) and rows below are divided by
/// them; C = B^T.  T is set to kothe_row_bound(a).  Throws when a needed
/// forward sum is not strictly positive.
FactorizationPair kothe_factorization(const CoefficientSequence& a, std::size_t N);

/// Certified row-sum bound for that factorization:
/// 1 + |a|_2 + sum_{j >= 0} (sum_{2^{j-1} < i < 2^{j+2}} |a(i)|)^2.
double kothe_row_bound(const CoefficientSequence& a);

/// Ratio of sum_j (block l1 of |b c|)^2 against the certified product bound
/// cond_supsum2(b) * |c|_2^2; always in [0, 1], and 0 when the bound is 0.
double multiplier_product_check(const CoefficientSequence& b,
                                const CoefficientSequence& c);

/// a(n) + eps * 2^{-n} on [0, len): strictly positive regularization that
/// perturbs every multiplier condition by O(eps).
CoefficientSequence regularize(const CoefficientSequence& a, double eps,
                               std::size_t len);

}  // namespace hankelcert
