#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "maxplus/matrix.hpp"

namespace maxplus {

struct RootWitness {
  std::size_t i;  // 0-based
  std::size_t j;
  std::size_t t;
  /// a_ij + a_tt
  double lhs;
  /// a_it + a_tj
  double rhs;
};

struct RootConditionReport {
  bool holds = true;
  /// First violation in lexicographic (i, j, t) order.
  std::optional<RootWitness> witness;
};

/// a_ij + a_tt >= a_it + a_tj for all i, j, t.
RootConditionReport root_condition(const Matrix& a, Tolerance tol = {});

/// B_ij = a_ij + ((1 - k) / k) * max(a_ii, a_jj). DomainError when the root
/// condition fails or k < 1.
Matrix kth_root(const Matrix& a, int k, Tolerance tol = {});

struct RootCounterexample {
  /// pdiag(a)^k
  Matrix power;
  RootConditionReport report;
  /// 0-based index i (1 <= i <= n - 2) that meets the hypothesis.
  std::size_t index;
};

/// A k-th power of a pseudo-diagonal matrix that violates the root
/// condition. Requires n >= 3, k >= 2, 0 <= a_1 <= ... <= a_n (DomainError
/// otherwise); empty when no index satisfies
/// a_i > max((k - 2) a_n, k a_1) / (k - 1).
std::optional<RootCounterexample> root_counterexample(
    std::span<const double> a, int k);

}  // namespace maxplus
