#include "hankelcert/coefficients.hpp"

#include <cmath>

namespace hankelcert {

std::ptrdiff_t CoefficientSequence::support_max() const {
  for (std::size_t i = values_.size(); i > 0; --i)
    if (values_[i - 1] != 0.0) return static_cast<std::ptrdiff_t>(i - 1);
  return -1;
}

double CoefficientSequence::l1_norm() const {
  double s = 0.0;
  for (double v : values_) s += std::abs(v);
  return s;
}

double CoefficientSequence::l2_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

double CoefficientSequence::linf_norm() const {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

bool CoefficientSequence::all_nonnegative() const {
  for (double v : values_)
    if (v < 0.0) return false;
  return true;
}

bool CoefficientSequence::all_strictly_positive() const {
  if (values_.empty()) return false;
  for (double v : values_)
    if (v <= 0.0) return false;
  return true;
}

CoefficientSequence modulus_symbol(const std::vector<std::complex<double>>& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::abs(a[i]);
  return CoefficientSequence(std::move(out));
}

}  // namespace hankelcert
