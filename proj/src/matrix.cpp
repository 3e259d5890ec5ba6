#include "qesa/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qesa/errors.hpp"

namespace qesa {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

bool Matrix::exact() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v) && v == std::trunc(v); });
}

bool Matrix::finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::leading_block(std::size_t k) const {
  k = std::min(k, dim_);
  Matrix b(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
  return b;
}

double Matrix::max_abs() const { return max_abs(dim_); }

double Matrix::max_abs(std::size_t k) const {
  k = std::min(k, dim_);
  double m = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  Matrix out(n);
  // i-k-j order; most operands here are banded, so zero rows of lhs are skipped.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

double max_abs_diff(const Matrix& a, const Matrix& b, std::size_t k) {
  require_same_dim(a, b, "max_abs_diff");
  k = std::min(k, a.dim());
  double m = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace qesa
