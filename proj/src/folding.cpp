#include "hankelcert/folding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hankelcert {

namespace {

// Prepend k_0 = 0 with unit weight when the set lacks it; the weight at
// frequency 0 never enters the recursion, so 1 keeps the profile positive.
std::pair<LacunarySet, CoefficientSequence> augment_with_zero(
    const LacunarySet& K, const CoefficientSequence& v) {
  if (K.contains_zero()) return {K, v};
  std::vector<std::int64_t> ks;
  ks.reserve(K.size() + 1);
  ks.push_back(0);
  ks.insert(ks.end(), K.indices().begin(), K.indices().end());
  std::vector<double> vs;
  vs.reserve(v.size() + 1);
  vs.push_back(1.0);
  vs.insert(vs.end(), v.values().begin(), v.values().end());
  return {LacunarySet(std::move(ks)), CoefficientSequence(std::move(vs))};
}

}  // namespace

FoldProfile fold_u(const LacunarySet& K_in, const CoefficientSequence& v_in,
                   GapStrategy strategy, double gap_value) {
  if (K_in.size() != v_in.size())
    throw std::invalid_argument("fold_u: need exactly one weight per frequency");
  if (!is_strongly_lacunary(K_in))
    throw std::invalid_argument("fold_u: set must be strongly lacunary");
  if (!(gap_value > 0.0))
    throw std::invalid_argument("fold_u: gap_value must be strictly positive");
  if (!v_in.values().empty() && !v_in.all_strictly_positive())
    throw std::invalid_argument("fold_u: weights must be strictly positive");

  auto [K, v] = augment_with_zero(K_in, v_in);
  const auto& ks = K.indices();
  const std::size_t J = ks.size() - 1;

  FoldProfile prof;
  prof.gap_strategy = strategy;
  prof.gap_value = gap_value;
  prof.set = K;
  prof.weights = v;
  prof.u.assign(static_cast<std::size_t>(ks[J]) + 1, 0.0);
  prof.u[0] = 1.0;

  auto& u = prof.u;
  for (std::size_t j = 0; j < J; ++j) {
    const std::int64_t lo = ks[j];        // block [0, k_j] is finished
    const std::int64_t hi = ks[j + 1];
    const double vj1 = v[j + 1];
    // Reflected block [hi - lo, hi]: u(hi - n) = v_{j+1} u(n) for n <= lo.
    for (std::int64_t n = 0; n <= lo; ++n)
      u[static_cast<std::size_t>(hi - n)] = vj1 * u[static_cast<std::size_t>(n)];
    // Gap (lo, hi - lo).
    if (strategy == GapStrategy::constant) {
      for (std::int64_t m = lo + 1; m < hi - lo; ++m)
        u[static_cast<std::size_t>(m)] = gap_value;
    } else {
      // First half (lo, hi/2]: free values; an even midpoint lands here.
      for (std::int64_t m = lo + 1; 2 * m <= hi && m < hi - lo; ++m)
        u[static_cast<std::size_t>(m)] = gap_value;
      // Second half: u(m) = v_{j+1} u(hi - m), mirroring the first half.
      for (std::int64_t m = hi / 2 + 1; m < hi - lo; ++m)
        u[static_cast<std::size_t>(m)] = vj1 * u[static_cast<std::size_t>(hi - m)];
    }
  }
  return prof;
}

std::optional<double> product_formula_u(const LacunarySet& K,
                                        const CoefficientSequence& v,
                                        std::int64_t k) {
  if (K.size() != v.size())
    throw std::invalid_argument(
        "product_formula_u: need exactly one weight per frequency");
  const auto rep = alternating_representation(k, K);
  if (!rep) return std::nullopt;
  double prod = 1.0;
  for (std::size_t j : rep->positions) prod *= v[j];
  return prod;
}

std::vector<double> partial_product_u(const LacunarySet& K,
                                      const CoefficientSequence& v,
                                      std::size_t J) {
  if (K.size() != v.size())
    throw std::invalid_argument(
        "partial_product_u: need exactly one weight per frequency");
  if (J >= K.size())
    throw std::invalid_argument("partial_product_u: level J out of range");
  if (!K.contains_zero())
    throw std::invalid_argument("partial_product_u: set must contain 0");

  const auto& ks = K.indices();
  std::vector<double> cur(static_cast<std::size_t>(ks[J]) + 1, 0.0);
  cur[0] = 1.0;
  for (std::size_t j = 1; j <= J; ++j) {
    const std::int64_t kj = ks[j];
    // cur += A^(j) cur with (A^(j) x)(m) = v_j x(k_j - m) on [0, k_j];
    // the reversed slice is copied first so the update reads old values.
    std::vector<double> rev(static_cast<std::size_t>(kj) + 1);
    for (std::int64_t m = 0; m <= kj; ++m)
      rev[static_cast<std::size_t>(m)] = cur[static_cast<std::size_t>(kj - m)];
    const double vj = v[j];
    for (std::int64_t m = 0; m <= kj; ++m)
      cur[static_cast<std::size_t>(m)] += vj * rev[static_cast<std::size_t>(m)];
  }
  return cur;
}

void TrigPolynomial::add_term(std::int64_t frequency, std::complex<double> c) {
  auto [it, inserted] = coeff_.try_emplace(frequency, c);
  if (!inserted) it->second += c;
  if (it->second == std::complex<double>(0.0, 0.0)) coeff_.erase(it);
}

std::complex<double> TrigPolynomial::coefficient(std::int64_t frequency) const {
  auto it = coeff_.find(frequency);
  return it == coeff_.end() ? std::complex<double>(0.0, 0.0) : it->second;
}

void TrigPolynomial::add(const TrigPolynomial& other, std::complex<double> scale) {
  for (const auto& [freq, c] : other.coeff_) add_term(freq, scale * c);
}

TrigPolynomial TrigPolynomial::shifted_scaled(std::int64_t shift,
                                              std::complex<double> c) const {
  TrigPolynomial out;
  for (const auto& [freq, coef] : coeff_) out.add_term(freq + shift, c * coef);
  return out;
}

TrigPolynomial TrigPolynomial::reflected() const {
  TrigPolynomial out;
  for (const auto& [freq, coef] : coeff_) out.add_term(-freq, coef);
  return out;
}

RefoldResult refold(const LacunarySet& K,
                    const std::vector<std::complex<double>>& v, std::size_t J,
                    RefoldSign sign) {
  if (J >= K.size() || J >= v.size())
    throw std::invalid_argument(
        "refold: need frequencies and weights for levels 1..J");
  RefoldResult r;
  r.even.add_term(0, 1.0);
  const double s = sign == RefoldSign::plus ? 1.0 : -1.0;
  for (std::size_t j = 1; j <= J; ++j) {
    const std::int64_t kj = K[j];
    const std::complex<double> vj = v[j];
    // Simultaneous update from the level j-1 pair.
    TrigPolynomial even_next = r.even;
    even_next.add(r.odd.shifted_scaled(-kj, s * std::conj(vj)));
    TrigPolynomial odd_next = r.odd;
    odd_next.add(r.even.shifted_scaled(kj, vj));
    r.even = std::move(even_next);
    r.odd = std::move(odd_next);
  }
  return r;
}

RefoldCheckReport refold_coefficient_check(const LacunarySet& K_in,
                                           const CoefficientSequence& v_in,
                                           std::size_t J_in, double tol) {
  if (!is_strongly_lacunary(K_in))
    throw std::invalid_argument(
        "refold_coefficient_check: set must be strongly lacunary");
  if (!v_in.all_nonnegative())
    throw std::invalid_argument(
        "refold_coefficient_check: weights must be nonnegative");
  if (K_in.size() != v_in.size())
    throw std::invalid_argument(
        "refold_coefficient_check: need exactly one weight per frequency");
  if (J_in >= K_in.size())
    throw std::invalid_argument("refold_coefficient_check: level J out of range");

  // The recursion implicitly anchors at frequency 0 through U_e^(0) = 1, so a
  // set without 0 is compared through its augmented form.
  auto [K, v] = augment_with_zero(K_in, v_in);
  const std::size_t J = K_in.contains_zero() ? J_in : J_in + 1;

  std::vector<std::complex<double>> vc(v.values().begin(), v.values().end());
  const RefoldResult r = refold(K, vc, J, RefoldSign::plus);

  TrigPolynomial f = r.even.reflected();
  f.add(r.odd);

  RefoldCheckReport rep;
  rep.tol = tol;
  const std::int64_t kJ = K[J];
  for (std::int64_t k = 0; k <= kJ; ++k) {
    const auto expected = product_formula_u(K, v, k);
    const double want = expected ? *expected : 0.0;
    if (expected) ++rep.matched;
    rep.max_error = std::max(rep.max_error, std::abs(f.coefficient(k) - want));
  }
  // Everything off [0, k_J] must vanish.
  for (const auto& [freq, c] : f.terms())
    if (freq < 0 || freq > kJ)
      rep.max_error = std::max(rep.max_error, std::abs(c));
  rep.ok = rep.max_error <= tol;
  return rep;
}

}  // namespace hankelcert
