#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hankelcert {

/// Finitely supported real sequence a(0), a(1), ...; indices beyond the
/// stored length read as zero.
class CoefficientSequence {
public:
  CoefficientSequence() = default;
  explicit CoefficientSequence(std::vector<double> values)
      : values_(std::move(values)) {}

  static CoefficientSequence zeros(std::size_t n) {
    return CoefficientSequence(std::vector<double>(n, 0.0));
  }

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

  double operator[](std::size_t n) const {
    return n < values_.size() ? values_[n] : 0.0;
  }

  /// Largest index with a nonzero value, or -1 for the zero sequence.
  std::ptrdiff_t support_max() const;

  double l1_norm() const;
  double l2_norm() const;
  double linf_norm() const;

  bool all_nonnegative() const;
  bool all_strictly_positive() const;

private:
  std::vector<double> values_;
};

/// Entrywise modulus of a complex sequence.  Spectral bounds for a complex
/// symbol reduce to this sequence: |entries| can only increase row sums and
/// quadratic forms with nonnegative vectors.
CoefficientSequence modulus_symbol(const std::vector<std::complex<double>>& a);

}  // namespace hankelcert
