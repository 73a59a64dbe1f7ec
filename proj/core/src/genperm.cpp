#include "maxplus/genperm.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

GenPermMatrix::GenPermMatrix(std::vector<std::size_t> perm,
                             std::vector<double> weights)
    : perm_(std::move(perm)), weights_(std::move(weights)) {
  if (perm_.empty()) throw ShapeError("generalized permutation of size 0");
  if (perm_.size() != weights_.size())
    throw ShapeError("permutation and weights differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t target : perm_) {
    if (target >= perm_.size() || seen[target])
      throw DomainError("not a permutation of [n]");
    seen[target] = true;
  }
  for (double w : weights_)
    if (!std::isfinite(w)) throw DomainError("weights must be finite");
}

GenPermMatrix GenPermMatrix::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return GenPermMatrix(std::move(perm), std::vector<double>(n, 0.0));
}

GenPermMatrix GenPermMatrix::diagonal(std::span<const double> weights) {
  std::vector<std::size_t> perm(weights.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return GenPermMatrix(std::move(perm),
                       std::vector<double>(weights.begin(), weights.end()));
}

GenPermMatrix GenPermMatrix::permutation(std::vector<std::size_t> perm) {
  const std::size_t n = perm.size();
  return GenPermMatrix(std::move(perm), std::vector<double>(n, 0.0));
}

GenPermMatrix GenPermMatrix::from_matrix(const Matrix& m) {
  require_square(m, "GenPermMatrix::from_matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t finite = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_finite()) {
        perm[i] = j;
        weights[i] = m(i, j).value();
        ++finite;
      }
    }
    if (finite != 1) {
      throw DomainError("row " + std::to_string(i + 1) +
                        " must have exactly one finite entry");
    }
  }
  return GenPermMatrix(std::move(perm), std::move(weights));
}

Matrix GenPermMatrix::to_matrix() const {
  Matrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, perm_[i]) = weights_[i];
  return m;
}

GenPermMatrix GenPermMatrix::inverse() const {
  // (P^-1)_{pi(i), i} = -p_i
  std::vector<std::size_t> perm(size());
  std::vector<double> weights(size());
  for (std::size_t i = 0; i < size(); ++i) {
    perm[perm_[i]] = i;
    weights[perm_[i]] = -weights_[i];
  }
  return GenPermMatrix(std::move(perm), std::move(weights));
}

Vector GenPermMatrix::apply(const Vector& x) const {
  if (x.size() != size()) throw ShapeError("apply: vector size mismatch");
  Vector y(size());
  for (std::size_t i = 0; i < size(); ++i) y[i] = otimes(weights_[i], x[perm_[i]]);
  return y;
}

Matrix conjugate(const Matrix& a, const GenPermMatrix& p) {
  require_square(a, "conjugate");
  if (a.rows() != p.size()) throw ShapeError("conjugate: dimension mismatch");
  const std::size_t n = a.rows();
  const auto perm = p.perm();
  const auto w = p.weights();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b(i, j) = otimes(otimes(w[i], a(perm[i], perm[j])), -w[j]);
  return b;
}

}  // namespace maxplus
