#pragma once

#include <cstddef>
#include <vector>

namespace hankelcert {

/// Minimal dense row-major matrix of doubles.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  Matrix transposed() const;
  bool is_symmetric(double tol = 0.0) const;
  double max_abs() const;

  /// Largest row l1 norm (the (1,inf) operator norm on rows).
  double max_row_sum_abs() const;
  /// Largest column l1 norm.
  double max_col_sum_abs() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> mat_vec(const Matrix& m, const std::vector<double>& x);

}  // namespace hankelcert
