#include "hankelcert/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hankelcert {

namespace {

// Block sums index the raw storage with explicitly clamped bounds.  Writing
// them against the zero-extending operator[] looks equivalent, but GCC 11 at
// -O2 mistranslates that accumulation pattern (iterations vanish from loops
// whose trip count depends on the clamp), so keep the bound computation
// separate from the element access.
double block_abs_sum(const std::vector<double>& vals, std::int64_t lo,
                     std::int64_t hi) {  // over lo <= n < hi
  const std::int64_t end =
      std::min<std::int64_t>(hi, static_cast<std::int64_t>(vals.size()));
  double s = 0.0;
  for (std::int64_t n = std::max<std::int64_t>(lo, 0); n < end; ++n)
    s += std::abs(vals[static_cast<std::size_t>(n)]);
  return s;
}

double block_square_sum(const std::vector<double>& vals, std::int64_t lo,
                        std::int64_t hi) {  // over lo <= n < hi
  const std::int64_t end =
      std::min<std::int64_t>(hi, static_cast<std::int64_t>(vals.size()));
  double s = 0.0;
  for (std::int64_t n = std::max<std::int64_t>(lo, 0); n < end; ++n) {
    const double x = vals[static_cast<std::size_t>(n)];
    s += x * x;
  }
  return s;
}

}  // namespace

double cond_supsum2(const CoefficientSequence& a) {
  const std::ptrdiff_t last = a.support_max();
  const std::vector<double>& vals = a.values();
  double best = 0.0;
  for (std::int64_t lo = 1; lo <= last; lo *= 2)
    best = std::max(best, block_square_sum(vals, lo, 2 * lo));
  return best;
}

double cond_sumsquaresum(const CoefficientSequence& a) {
  const std::ptrdiff_t last = a.support_max();
  const std::vector<double>& vals = a.values();
  double total = 0.0;
  for (std::int64_t lo = 1; lo <= last; lo *= 2) {
    const double s = block_abs_sum(vals, lo, 2 * lo);
    total += s * s;
  }
  return total;
}

double cond_supdouble(const CoefficientSequence& a, std::int64_t M_max) {
  const std::ptrdiff_t last = a.support_max();
  if (last < 0) return 0.0;
  if (M_max <= 0) M_max = static_cast<std::int64_t>(last) + 1;
  const std::vector<double>& vals = a.values();
  double best = 0.0;
  for (std::int64_t M = 1; M <= M_max; ++M) {
    double total = 0.0;
    for (std::int64_t j = 1; j * M <= last; ++j) {
      const std::int64_t hi = std::min<std::int64_t>((j + 1) * M - 1, last);
      const double s = block_abs_sum(vals, j * M, hi + 1);
      total += s * s;
    }
    best = std::max(best, total);
  }
  return best;
}

FactorizationPair kothe_factorization(const CoefficientSequence& a, std::size_t N) {
  const HankelOperator H = make_hankel(a);
  if (!a.all_nonnegative())
    throw std::invalid_argument("kothe_factorization: symbol must be nonnegative");
  // Forward sums S(n) = sum_{n <= r < 2n} a(r) for 1 <= n < N.
  const std::vector<double>& vals = a.values();
  std::vector<double> S(N, 0.0);
  for (std::size_t n = 1; n < N; ++n) {
    const double s = block_abs_sum(vals, static_cast<std::int64_t>(n),
                                   static_cast<std::int64_t>(2 * n));
    if (!(s > 0.0))
      throw std::invalid_argument(
          "kothe_factorization: forward sum vanishes; the symbol must be "
          "strictly positive across [0, 2N)");
    S[n] = s;
  }

  FactorizationPair pair;
  pair.B = Matrix(N, N);
  for (std::size_t m = 0; m < N; ++m) {
    pair.B(m, m) = H.entry(m, m);
    for (std::size_t n = m + 1; n < N; ++n) pair.B(m, n) = H.entry(m, n) * S[n];
    for (std::size_t n = 0; n < m; ++n) pair.B(m, n) = H.entry(m, n) / S[m];
  }
  pair.C = pair.B.transposed();
  pair.T = kothe_row_bound(a);
  return pair;
}

double kothe_row_bound(const CoefficientSequence& a) {
  const std::ptrdiff_t last = a.support_max();
  const std::vector<double>& vals = a.values();
  double blocks = 0.0;
  // Overlapping blocks 2^{j-1} < i < 2^{j+2}; for j = 0 the lower endpoint is
  // 1/2, so the block starts at i = 1.
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t lo = j == 0 ? 1 : (std::int64_t(1) << (j - 1)) + 1;
    const std::int64_t hi = (std::int64_t(1) << (j + 2)) - 1;  // inclusive
    if (lo > last) break;
    const double s = block_abs_sum(vals, lo, hi + 1);
    blocks += s * s;
  }
  return 1.0 + a.l2_norm() + blocks;
}

double multiplier_product_check(const CoefficientSequence& b,
                                const CoefficientSequence& c) {
  const double bound = cond_supsum2(b) * c.l2_norm() * c.l2_norm();
  if (bound == 0.0) return 0.0;
  const std::ptrdiff_t last = std::min(b.support_max(), c.support_max());
  const std::vector<double>& bv = b.values();
  const std::vector<double>& cv = c.values();
  const auto shared =
      static_cast<std::int64_t>(std::min(bv.size(), cv.size()));
  double lhs = 0.0;
  for (std::int64_t lo = 1; lo <= last; lo *= 2) {
    const std::int64_t end = std::min<std::int64_t>(2 * lo, shared);
    double s = 0.0;
    for (std::int64_t n = lo; n < end; ++n)
      s += std::abs(bv[static_cast<std::size_t>(n)] *
                    cv[static_cast<std::size_t>(n)]);
    lhs += s * s;
  }
  return lhs / bound;
}

CoefficientSequence regularize(const CoefficientSequence& a, double eps,
                               std::size_t len) {
  if (!(eps > 0.0))
    throw std::invalid_argument("regularize: eps must be strictly positive");
  std::vector<double> out(len, 0.0);
  double tail = eps;
  for (std::size_t n = 0; n < len; ++n) {
    out[n] = a[n] + tail;
    tail *= 0.5;
  }
  return CoefficientSequence(std::move(out));
}

}  // namespace hankelcert
