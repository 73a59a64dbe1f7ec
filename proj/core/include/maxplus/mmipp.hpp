#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Orbit of x(r + 1) = A (x) x(r).
struct SimTrace {
  Scalar lambda;
  std::vector<Vector> states;
  /// First k with x(k + 1) = lambda (x) x(k).
  std::optional<std::size_t> steady_index;

  bool reached_steady_state() const noexcept {
    return steady_index.has_value();
  }

  bool operator==(const SimTrace&) const = default;
};

/// Runs t_max steps, recording x(0) .. x(t_max).
SimTrace simulate(const Matrix& a, const Vector& x0, std::size_t t_max,
                  Tolerance tol = {});

enum class AttrVerdict { Member, NotWithinHorizon };

/// Whether some x(k), k <= k_max, is an eigenvector for lambda(A). A negative
/// answer only covers the horizon.
AttrVerdict in_attr(const Matrix& a, const Vector& x0, std::size_t k_max,
                    Tolerance tol = {});

/// max(2 n^2, 64).
std::size_t default_horizon(std::size_t n) noexcept;

/// Header `# lambda=<value> steady_index=<k or none>`, then one state per
/// line in the matrix text format.
void write_trace(std::ostream& out, const SimTrace& trace);
SimTrace read_trace(std::istream& in);

const char* to_string(AttrVerdict verdict) noexcept;

}  // namespace maxplus
