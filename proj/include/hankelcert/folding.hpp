#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hankelcert/coefficients.hpp"
#include "hankelcert/sequences.hpp"

namespace hankelcert {

enum class GapStrategy {
  mirror,    // free first half of each gap, second half reflected and scaled
  constant,  // the whole gap takes the constant gap_value
};

/// Weight profile u(0..k_J) built by the folding construction: u(0) = 1 and
/// u(k_j - n) = v_j u(n) for 0 <= n < k_j / 2 at every level j.
struct FoldProfile {
  std::vector<double> u;
  GapStrategy gap_strategy = GapStrategy::mirror;
  double gap_value = 1.0;
  LacunarySet set;            // includes the augmented 0 when it was added
  CoefficientSequence weights;  // aligned with set
};

/// Builds the profile level by level.  Requires a strongly lacunary set and
/// strictly positive weights, one per frequency.  A set without 0 is
/// augmented with k_0 = 0, v_0 = 1 (the weight at 0 never enters the
/// construction).  With the mirror strategy the first half of each gap
/// (k_j, k_{j+1}/2] is filled with gap_value and the second half mirrors it;
/// an even midpoint belongs to the freely filled first half.  The constant
/// strategy sets the whole gap to gap_value.
FoldProfile fold_u(const LacunarySet& K, const CoefficientSequence& v,
                   GapStrategy strategy = GapStrategy::mirror,
                   double gap_value = 1.0);

/// u(k) as the product of the weights along the alternating representation
/// of k (empty product 1 for k = 0); nullopt when k has no representation.
std::optional<double> product_formula_u(const LacunarySet& K,
                                        const CoefficientSequence& v,
                                        std::int64_t k);

/// u^(J) = (I + A^(J)) ... (I + A^(1)) e_0 over [0, k_J], where A^(j) is the
/// single-antidiagonal piece of A_v at m + n = k_j.  The level-j summand of
/// the expanded product is supported on [k_j - k_{j-1}, k_j]; successive
/// supports are disjoint.
std::vector<double> partial_product_u(const LacunarySet& K,
                                      const CoefficientSequence& v,
                                      std::size_t J);

/// Finite linear combination of exponentials e^{i omega t} with integer
/// frequencies of either sign.
class TrigPolynomial {
public:
  using Coefficients = std::map<std::int64_t, std::complex<double>>;

  TrigPolynomial() = default;

  void add_term(std::int64_t frequency, std::complex<double> coefficient);
  std::complex<double> coefficient(std::int64_t frequency) const;
  const Coefficients& terms() const { return coeff_; }
  std::size_t term_count() const { return coeff_.size(); }

  void add(const TrigPolynomial& other, std::complex<double> scale = 1.0);
  /// this(t) replaced by c * e^{i shift t} * this(t).
  TrigPolynomial shifted_scaled(std::int64_t shift, std::complex<double> c) const;
  /// Coefficients of t -> this(-t): frequencies negate, coefficients stay.
  TrigPolynomial reflected() const;

private:
  Coefficients coeff_;
};

enum class RefoldSign { plus, minus };

struct RefoldResult {
  TrigPolynomial even;  // U_e^(J)
  TrigPolynomial odd;   // U_o^(J)
};

/// Two-term recursion U_e^(j) = U_e^(j-1) +/- conj(v_j e^{i k_j t}) U_o^(j-1),
/// U_o^(j) = U_o^(j-1) + v_j e^{i k_j t} U_e^(j-1), starting from U_e = 1 and
/// U_o = 0; frequencies k_1..k_J and weights v_1..v_J are consumed (index 0
/// is never used).  The minus sign gives the flattening (Rudin-Shapiro style)
/// variant.
RefoldResult refold(const LacunarySet& K, const std::vector<std::complex<double>>& v,
                    std::size_t J, RefoldSign sign = RefoldSign::plus);

struct RefoldCheckReport {
  bool ok = false;
  double max_error = 0.0;  // worst deviation over all frequencies
  std::size_t matched = 0;  // frequencies in [0, k_J] carrying a fold value
  double tol = 0.0;
};

/// Confirms that the coefficients of t -> U_e^(J)(-t) + U_o^(J)(t) agree with
/// the product-formula profile on the representable frequencies in [0, k_J]
/// and vanish at every other frequency.
RefoldCheckReport refold_coefficient_check(const LacunarySet& K,
                                           const CoefficientSequence& v,
                                           std::size_t J, double tol = 1e-12);

}  // namespace hankelcert
