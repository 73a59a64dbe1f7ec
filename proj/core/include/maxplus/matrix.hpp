#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "maxplus/scalar.hpp"

namespace maxplus {

/// Column vector over the max-plus semiring.
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the max-plus semiring. Always at least 1x1.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar::eps());
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  /// The all-zero matrix (every entry is the multiplicative identity).
  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix diag(std::span<const double> d);
  /// Pseudo-diagonal matrix: d on the diagonal, 0 elsewhere.
  static Matrix pdiag(std::span<const double> d);
  static Matrix from_column(const Vector& x);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// True iff no entry is epsilon.
  bool is_finite() const noexcept;

  Scalar operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }

  Vector column(std::size_t j) const;
  /// Diagonal entries of a square finite matrix as reals.
  std::vector<double> diagonal() const;

  std::span<const Scalar> data() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Entrywise (+).
Matrix add(const Matrix& a, const Matrix& b);
/// Max-plus product.
Matrix mul(const Matrix& a, const Matrix& b);
Vector mul(const Matrix& a, const Vector& x);
Matrix scale(Scalar lambda, const Matrix& a);
Vector scale(Scalar lambda, const Vector& x);

/// k-fold product by left-to-right repeated multiplication. k = 0 yields the
/// unit matrix and is only defined for finite matrices.
Matrix power(const Matrix& a, int k);

/// Entrywise a <= b, epsilon below everything.
bool leq(const Matrix& a, const Matrix& b);

bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol = {});
bool approx_equal(const Vector& a, const Vector& b, Tolerance tol = {});

/// Largest |a_ij - b_ij| over finite entries; +infinity when the epsilon
/// patterns differ.
double max_abs_difference(const Matrix& a, const Matrix& b);
double max_abs_difference(const Vector& a, const Vector& b);

bool is_eps_vector(const Vector& x) noexcept;

/// Throws ShapeError unless a is square.
void require_square(const Matrix& a, const char* what);
/// Throws DomainError unless a is finite.
void require_finite(const Matrix& a, const char* what);

}  // namespace maxplus
