#include "maxplus/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw ShapeError("matrix must be at least 1x1");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix must be at least 1x1");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0.0;
  return m;
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, 0.0);
}

Matrix Matrix::diag(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::pdiag(std::span<const double> d) {
  Matrix m = zeros(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_column(const Vector& x) {
  Matrix m(x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) m(i, 0) = x[i];
  return m;
}

bool Matrix::is_finite() const noexcept {
  return std::ranges::all_of(data_, [](Scalar s) { return s.is_finite(); });
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<double> Matrix::diagonal() const {
  require_square(*this, "diagonal");
  std::vector<double> d(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i).is_eps()) throw DomainError("diagonal entry is epsilon");
    d[i] = (*this)(i, i).value();
  }
  return d;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = oplus(a(i, j), b(i, j));
  return c;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mul: inner dimensions " + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + " differ");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik.is_eps()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = oplus(c(i, j), otimes(aik, b(k, j)));
    }
  }
  return c;
}

Vector mul(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw ShapeError("mul: vector of size " + std::to_string(x.size()) +
                     " does not match " + std::to_string(a.cols()) +
                     " columns");
  }
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      y[i] = oplus(y[i], otimes(a(i, k), x[k]));
  return y;
}

Matrix scale(Scalar lambda, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = otimes(lambda, a(i, j));
  return c;
}

Vector scale(Scalar lambda, const Vector& x) {
  Vector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = otimes(lambda, x[i]);
  return y;
}

Matrix power(const Matrix& a, int k) {
  require_square(a, "power");
  if (k < 0) throw DomainError("power: negative exponent");
  if (k == 0) {
    require_finite(a, "power with exponent 0");
    return Matrix::identity(a.rows());
  }
  Matrix result = a;
  for (int step = 1; step < k; ++step) result = mul(result, a);
  return result;
}

bool leq(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) > b(i, j)) return false;
  return true;
}

bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return std::ranges::equal(a.data(), b.data(), [&](Scalar x, Scalar y) {
    return tol.equal(x, y);
  });
}

bool approx_equal(const Vector& a, const Vector& b, Tolerance tol) {
  return std::ranges::equal(a, b,
                            [&](Scalar x, Scalar y) { return tol.equal(x, y); });
}

namespace {

double entry_difference(Scalar x, Scalar y) {
  if (x.is_eps() || y.is_eps()) {
    return x.is_eps() && y.is_eps() ? 0.0
                                     : std::numeric_limits<double>::infinity();
  }
  return std::fabs(x.value() - y.value());
}

}  // namespace

double max_abs_difference(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_difference");
  double worst = 0.0;
  for (std::size_t idx = 0; idx < a.data().size(); ++idx)
    worst = std::max(worst, entry_difference(a.data()[idx], b.data()[idx]));
  return worst;
}

double max_abs_difference(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, entry_difference(a[i], b[i]));
  return worst;
}

bool is_eps_vector(const Vector& x) noexcept {
  return std::ranges::all_of(x, [](Scalar s) { return s.is_eps(); });
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw ShapeError(std::string(what) + ": matrix is " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     ", expected square");
  }
}

void require_finite(const Matrix& a, const char* what) {
  if (!a.is_finite())
    throw DomainError(std::string(what) + ": matrix must be finite");
}

}  // namespace maxplus
