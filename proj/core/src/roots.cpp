#include "maxplus/roots.hpp"

#include <algorithm>
#include <cmath>

#include "maxplus/errors.hpp"
#include "maxplus/pdiag.hpp"

namespace maxplus {

RootConditionReport root_condition(const Matrix& a, Tolerance tol) {
  require_square(a, "root_condition");
  require_finite(a, "root_condition");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        const double lhs = a(i, j).value() + a(t, t).value();
        const double rhs = a(i, t).value() + a(t, j).value();
        if (tol.less(lhs, rhs))
          return RootConditionReport{false, RootWitness{i, j, t, lhs, rhs}};
      }
    }
  }
  return {};
}

Matrix kth_root(const Matrix& a, int k, Tolerance tol) {
  if (k < 1) throw DomainError("kth_root: k must be positive");
  const RootConditionReport report = root_condition(a, tol);
  if (!report.holds)
    throw DomainError("kth_root: root condition fails, no root is guaranteed");
  const std::size_t n = a.rows();
  const double exponent = static_cast<double>(1 - k) / k;
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double diag = std::max(a(i, i).value(), a(j, j).value());
      b(i, j) = a(i, j).value() + exponent * diag;
    }
  }
  return b;
}

std::optional<RootCounterexample> root_counterexample(
    std::span<const double> a, int k) {
  const std::size_t n = a.size();
  if (n < 3) throw DomainError("root_counterexample: needs n >= 3");
  if (k < 2) throw DomainError("root_counterexample: needs k >= 2");
  if (!std::isfinite(a.front()) || a.front() < 0)
    throw DomainError("root_counterexample: needs a_1 >= 0");
  if (!std::ranges::is_sorted(a))
    throw DomainError("root_counterexample: diagonal must be nondecreasing");

  const double bound =
      std::max((k - 2) * a.back(), k * a.front()) / static_cast<double>(k - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (a[i] > bound) {
      Matrix d = pdiag_power(a, k);
      RootConditionReport report = root_condition(d);
      return RootCounterexample{std::move(d), std::move(report), i};
    }
  }
  return std::nullopt;
}

}  // namespace maxplus
