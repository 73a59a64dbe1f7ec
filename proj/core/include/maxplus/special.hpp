#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "maxplus/genperm.hpp"
#include "maxplus/matrix.hpp"
#include "maxplus/spectral.hpp"

namespace maxplus {

/// a_ij = u_i + v_j.
struct SeparableFactorization {
  std::vector<double> u;
  std::vector<double> v;
};

struct OptimalNodeResult {
  /// 0-based nodes k with a_ik + a_kj >= a_il + a_lj for all i, j, l.
  std::vector<std::size_t> nodes;

  bool is_optimal_node() const noexcept { return !nodes.empty(); }
};

/// Exhaustive O(n^4) search. Finite square input only.
OptimalNodeResult optimal_nodes(const Matrix& a, Tolerance tol = {});

/// lambda = a_kk and basis {A_k} for the smallest optimal node k.
/// DomainError if A has no optimal node.
SpectralSummary optimal_node_eig(const Matrix& a, Tolerance tol = {});

/// Gauge u_1 = 0. Empty when A is not separable.
std::optional<SeparableFactorization> separable_factor(const Matrix& a,
                                                        Tolerance tol = {});

/// P = diag((v_i - u_i) / 2) and the symmetric S = P (x) A (x) P^-1.
std::pair<GenPermMatrix, Matrix> symmetrize_separable(const Matrix& a,
                                                      Tolerance tol = {});

struct PDiagableClassification {
  bool separable = false;
  bool optimal_node = false;
  std::optional<std::size_t> node;  // 0-based

  bool operator==(const PDiagableClassification&) const = default;
};

/// Separability and optimal-node status of a pseudo-diagonalizable matrix
/// read off its diagonal.
PDiagableClassification classify_pdiagable_special(const Matrix& a,
                                                   Tolerance tol = {});

}  // namespace maxplus
