#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qesa {

/// Dense square matrix, row-major.
///
/// Used both for the finite truncations of the operator algebra and for the
/// oracle Hamiltonians. Integer-valued matrices stay exact as long as their
/// entries are below 2^53, which covers every dimension this library builds.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }

  // 0-indexed access.
  double& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  std::span<const double> entries() const { return data_; }
  std::span<double> entries() { return data_; }

  /// True when every entry is an integer (the exactness flag).
  bool exact() const;
  bool finite() const;

  Matrix transpose() const;
  /// Leading k x k sub-block.
  Matrix leading_block(std::size_t k) const;

  /// max |a_ij| over the whole matrix, or over the leading k x k block.
  double max_abs() const;
  double max_abs(std::size_t k) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, double s) { return lhs *= s; }
  friend Matrix operator*(double s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// AB - BA. Throws DimensionMismatch on unequal dimensions.
Matrix commutator(const Matrix& a, const Matrix& b);

/// max |a_ij - b_ij| over the leading k x k block.
double max_abs_diff(const Matrix& a, const Matrix& b, std::size_t k);

}  // namespace qesa
