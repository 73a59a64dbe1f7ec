#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

/// Which check of the pseudo-diagonalizability verifier failed.
enum class WitnessKind {
  NonFinite,  ///< entry (i, j) is epsilon
  K,          ///< K_ij = a_ij (x) a_ji != 0, i < j
  T,          ///< T_ij = a_ij (x) a_{j,i+1} (x) a_{i+1,i} != 0, j >= i + 2
};

struct PDiagWitness {
  WitnessKind kind;
  std::size_t i;  // 0-based
  std::size_t j;  // 0-based
  Scalar value;

  bool operator==(const PDiagWitness&) const = default;
};

struct PDiagCertificate {
  bool verdict = false;
  /// p with diag(p) (x) A (x) diag(p)^-1 = pdiag(diagonal); set iff verdict
  /// and the certificate came from diagonalize().
  std::optional<std::vector<double>> scaling;
  std::optional<std::vector<double>> diagonal;
  std::optional<PDiagWitness> witness;

  bool operator==(const PDiagCertificate&) const = default;
};

/// Pseudo-diagonalizability verifier in O(n^2) scalar operations: all
/// K_ij must vanish, then all T_ij.
PDiagCertificate check_pdiag(const Matrix& a, Tolerance tol = {});

/// Solves p_i - p_{i+1} = a_{i+1,i} with p_n = 0. Returns the failing
/// certificate unchanged when A is not pseudo-diagonalizable.
PDiagCertificate diagonalize(const Matrix& a, Tolerance tol = {});

/// pdiag(d)^k by closed form, n >= 2 and k >= 2.
Matrix pdiag_power(std::span<const double> d, int k);

/// Gamma(D_lambda) = D_lambda (+) D_lambda^2 for D = pdiag(d), n >= 2.
Matrix pdiag_gamma_lambda(std::span<const double> d);

/// Eigenvalue and eigenbasis of pdiag(d), n >= 2.
SpectralSummary pdiag_eig(std::span<const double> d, Tolerance tol = {});

/// Gamma(A_lambda) of a pseudo-diagonalizable A without powers. When the
/// largest diagonal entry a is positive this is A_lambda with each diagonal
/// entry raised to at least -2a; otherwise it is I (+) A.
Matrix pdiagable_gamma_lambda(const Matrix& a, Tolerance tol = {});

/// Eigenvalue and eigenbasis of a pseudo-diagonalizable A, n >= 2.
SpectralSummary pdiagable_eig(const Matrix& a, Tolerance tol = {});

/// 2 iff n == 2 and max(d) < 0; otherwise 1.
std::size_t pdiag_cyclicity(std::span<const double> d);

enum class StabilityKind { StronglyStable, WeaklyStable, Other };

struct StabilityReport {
  StabilityKind kind;
  std::string attr_description;

  bool operator==(const StabilityReport&) const = default;
};

StabilityReport pdiag_stability(std::span<const double> d);

const char* to_string(WitnessKind kind) noexcept;
const char* to_string(StabilityKind kind) noexcept;

}  // namespace maxplus
