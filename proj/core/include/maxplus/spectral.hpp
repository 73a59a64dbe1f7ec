#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// A cyclic permutation of distinct nodes together with its weight and mean
/// with respect to some matrix.
struct Cycle {
  std::vector<std::size_t> nodes;
  Scalar weight;
  /// weight / length, or epsilon when the weight is epsilon.
  Scalar mean;

  std::size_t length() const noexcept { return nodes.size(); }
};

/// Builds the cycle through `nodes` (in order, closing back to the first).
/// DomainError if nodes are empty or repeat.
Cycle make_cycle(const Matrix& a, std::vector<std::size_t> nodes);

struct CriticalStructure {
  std::vector<std::size_t> nodes;
  /// Strongly connected components of the critical digraph, each sorted,
  /// ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes;
};

struct SpectralSummary {
  Scalar lambda;
  std::vector<std::size_t> critical_nodes;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<Vector> eigenbasis;

  std::size_t dimension() const noexcept { return eigenbasis.size(); }

  bool operator==(const SpectralSummary&) const = default;
};

/// Maximum cycle mean lambda(A) by Karp's algorithm on the digraph of finite
/// entries. Epsilon when that digraph is acyclic.
Scalar max_cycle_mean(const Matrix& a);

/// Critical nodes and their equivalence classes. DomainError when lambda(A)
/// is epsilon.
CriticalStructure critical_structure(const Matrix& a, Tolerance tol = {});

/// Gamma(A) = A (+) A^2 (+) ... (+) A^n for a finite square matrix.
Matrix transitive_closure(const Matrix& a);

/// A_lambda = lambda(A)^-1 (x) A. DomainError when lambda(A) is epsilon.
Matrix normalize(const Matrix& a);

/// Fundamental eigenvector basis: one column of Gamma(A_lambda) per critical
/// class (lowest index in the class).
SpectralSummary eigenbasis(const Matrix& a, Tolerance tol = {});

/// A (x) x == lambda (x) x up to tol. DomainError for the epsilon vector.
bool is_eigenvector(const Matrix& a, const Vector& x, Scalar lambda,
                    Tolerance tol = {});

/// gcd of critical cycle lengths within each critical component, combined by
/// lcm across components.
std::size_t cyclicity(const Matrix& a, Tolerance tol = {});

struct PeriodInfo {
  std::size_t period;
  std::size_t transient;
};

/// Smallest p >= 1 and smallest T >= 1 with A^{k+p} = lambda^p (x) A^k for
/// every T <= k <= k_max - p. Empty when no such pair fits the horizon.
std::optional<PeriodInfo> empirical_period(const Matrix& a, std::size_t k_max,
                                           Tolerance tol = {});

/// Residuation test: v is a max-combination of `generators` iff
/// v == (+)_k alpha_k (x) g_k with alpha_k = min_i (v_i - g_{k,i}).
bool is_max_combination(const Vector& v, const std::vector<Vector>& generators,
                        Tolerance tol = {});

/// Each basis spans the other's vectors.
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b,
               Tolerance tol = {});

}  // namespace maxplus
