#include "maxplus/special.hpp"

#include "maxplus/errors.hpp"
#include "maxplus/pdiag.hpp"

namespace maxplus {

OptimalNodeResult optimal_nodes(const Matrix& a, Tolerance tol) {
  require_square(a, "optimal_nodes");
  require_finite(a, "optimal_nodes");
  const std::size_t n = a.rows();
  // (A (x) A)_ij is the best two-step value over every intermediate l.
  const Matrix two_step = mul(a, a);
  OptimalNodeResult result;
  for (std::size_t k = 0; k < n; ++k) {
    bool dominates = true;
    for (std::size_t i = 0; i < n && dominates; ++i)
      for (std::size_t j = 0; j < n && dominates; ++j)
        dominates = tol.leq(two_step(i, j), otimes(a(i, k), a(k, j)));
    if (dominates) result.nodes.push_back(k);
  }
  return result;
}

SpectralSummary optimal_node_eig(const Matrix& a, Tolerance tol) {
  const OptimalNodeResult opt = optimal_nodes(a, tol);
  if (!opt.is_optimal_node())
    throw DomainError("optimal_node_eig: matrix has no optimal node");
  const std::size_t k = opt.nodes.front();
  CriticalStructure crit = critical_structure(a, tol);
  SpectralSummary out;
  out.lambda = a(k, k);
  out.critical_nodes = std::move(crit.nodes);
  out.classes = std::move(crit.classes);
  out.eigenbasis = {a.column(k)};
  return out;
}

std::optional<SeparableFactorization> separable_factor(const Matrix& a,
                                                        Tolerance tol) {
  require_square(a, "separable_factor");
  require_finite(a, "separable_factor");
  const std::size_t n = a.rows();
  SeparableFactorization f{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 0; j < n; ++j) f.v[j] = a(0, j).value();
  for (std::size_t i = 0; i < n; ++i) f.u[i] = a(i, 0).value() - a(0, 0).value();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!tol.equal(a(i, j), f.u[i] + f.v[j])) return std::nullopt;
  return f;
}

std::pair<GenPermMatrix, Matrix> symmetrize_separable(const Matrix& a,
                                                      Tolerance tol) {
  const auto f = separable_factor(a, tol);
  if (!f) throw DomainError("symmetrize_separable: matrix is not separable");
  std::vector<double> p(a.rows());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = (f->v[i] - f->u[i]) / 2;
  GenPermMatrix scaling = GenPermMatrix::diagonal(p);
  Matrix symmetric = conjugate(a, scaling);
  return {std::move(scaling), std::move(symmetric)};
}

PDiagableClassification classify_pdiagable_special(const Matrix& a,
                                                   Tolerance tol) {
  require_square(a, "classify_pdiagable_special");
  if (a.rows() < 2) throw DomainError("classify_pdiagable_special: needs n >= 2");
  if (!check_pdiag(a, tol).verdict)
    throw DomainError(
        "classify_pdiagable_special: matrix is not pseudo-diagonalizable");
  const std::vector<double> d = a.diagonal();
  const std::size_t n = d.size();

  PDiagableClassification out;
  if (n == 2) {
    out.separable = tol.is_zero(d[0] + d[1]);
  } else {
    out.separable = true;
    for (double x : d) out.separable = out.separable && tol.is_zero(x);
  }
  for (std::size_t k = 0; k < n && !out.optimal_node; ++k) {
    if (!tol.leq(0.0, d[k])) continue;
    bool others_nonpositive = true;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && !tol.leq(d[i], 0.0)) others_nonpositive = false;
    if (others_nonpositive) {
      out.optimal_node = true;
      out.node = k;
    }
  }
  return out;
}

}  // namespace maxplus
