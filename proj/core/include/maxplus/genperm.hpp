#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Generalized permutation matrix: row i holds the finite weight
/// weights()[i] in column perm()[i] and epsilon elsewhere. These are exactly
/// the invertible max-plus matrices.
class GenPermMatrix {
 public:
  GenPermMatrix(std::vector<std::size_t> perm, std::vector<double> weights);

  static GenPermMatrix identity(std::size_t n);
  static GenPermMatrix diagonal(std::span<const double> weights);
  static GenPermMatrix permutation(std::vector<std::size_t> perm);
  /// Recovers the permutation form of a matrix; DomainError unless the
  /// matrix has exactly one finite entry per row and column.
  static GenPermMatrix from_matrix(const Matrix& m);

  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const std::size_t> perm() const noexcept { return perm_; }
  std::span<const double> weights() const noexcept { return weights_; }

  Matrix to_matrix() const;
  GenPermMatrix inverse() const;

  /// P (x) x without expanding P.
  Vector apply(const Vector& x) const;

  bool operator==(const GenPermMatrix&) const = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<double> weights_;
};

/// P (x) A (x) P^-1 via the entrywise closed form
/// p_i + a_{pi(i), pi(j)} - p_j.
Matrix conjugate(const Matrix& a, const GenPermMatrix& p);

}  // namespace maxplus
