#include "maxplus/pdiag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

void require_diagonal(std::span<const double> d, const char* what) {
  if (d.size() < 2)
    throw DomainError(std::string(what) + ": needs n >= 2, got n = " +
                      std::to_string(d.size()));
  for (double x : d)
    if (!std::isfinite(x))
      throw DomainError(std::string(what) + ": diagonal entries must be finite");
}

void require_pdiagable(const Matrix& a, Tolerance tol, const char* what) {
  require_square(a, what);
  if (a.rows() < 2)
    throw DomainError(std::string(what) + ": needs n >= 2");
  if (!check_pdiag(a, tol).verdict)
    throw DomainError(std::string(what) +
                      ": matrix is not pseudo-diagonalizable");
}

double max_of(std::span<const double> d) { return *std::ranges::max_element(d); }

std::vector<std::size_t> all_nodes(std::size_t n) {
  std::vector<std::size_t> nodes(n);
  std::iota(nodes.begin(), nodes.end(), std::size_t{0});
  return nodes;
}

Matrix two_by_two_power(double d1, double d2, int k) {
  const double hi = std::max(d1, d2);
  const double lo = std::min(d1, d2);
  const std::size_t hi_idx = d1 >= d2 ? 0 : 1;
  Matrix m(2, 2);
  if (hi <= 0) {
    // Alternates between [[0, hi], [hi, 0]] and [[hi, 0], [0, hi]].
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        m(i, j) = (i + j + static_cast<std::size_t>(k)) % 2 == 0 ? 0.0 : hi;
    return m;
  }
  const double off = (k - 1) * hi;
  m(0, 1) = off;
  m(1, 0) = off;
  if (lo <= 0) {
    m(hi_idx, hi_idx) = k * hi;
    m(1 - hi_idx, 1 - hi_idx) = (k - 2) * hi;
    return m;
  }
  m(0, 0) = std::max(k * d1, (k - 2) * hi);
  m(1, 1) = std::max(k * d2, (k - 2) * hi);
  return m;
}

}  // namespace

const char* to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::NonFinite: return "nonfinite";
    case WitnessKind::K: return "K";
    case WitnessKind::T: return "T";
  }
  return "?";
}

const char* to_string(StabilityKind kind) noexcept {
  switch (kind) {
    case StabilityKind::StronglyStable: return "strongly-stable";
    case StabilityKind::WeaklyStable: return "weakly-stable";
    case StabilityKind::Other: return "other";
  }
  return "?";
}

PDiagCertificate check_pdiag(const Matrix& a, Tolerance tol) {
  require_square(a, "check_pdiag");
  const std::size_t n = a.rows();
  PDiagCertificate cert;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_eps()) {
        cert.witness = PDiagWitness{WitnessKind::NonFinite, i, j, Scalar::eps()};
        return cert;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar k_ij = otimes(a(i, j), a(j, i));
      if (!tol.is_zero(k_ij)) {
        cert.witness = PDiagWitness{WitnessKind::K, i, j, k_ij};
        return cert;
      }
    }
  }
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      const Scalar t_ij = otimes(otimes(a(i, j), a(j, i + 1)), a(i + 1, i));
      if (!tol.is_zero(t_ij)) {
        cert.witness = PDiagWitness{WitnessKind::T, i, j, t_ij};
        return cert;
      }
    }
  }
  cert.verdict = true;
  return cert;
}

PDiagCertificate diagonalize(const Matrix& a, Tolerance tol) {
  PDiagCertificate cert = check_pdiag(a, tol);
  if (!cert.verdict) return cert;
  const std::size_t n = a.rows();
  std::vector<double> p(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;) p[i] = p[i + 1] + a(i + 1, i).value();
  cert.scaling = std::move(p);
  cert.diagonal = a.diagonal();
  return cert;
}

Matrix pdiag_power(std::span<const double> d, int k) {
  require_diagonal(d, "pdiag_power");
  if (k < 2) throw DomainError("pdiag_power: needs k >= 2; use power()");
  const std::size_t n = d.size();
  if (n == 2) return two_by_two_power(d[0], d[1], k);

  const double top = max_of(d);
  if (top <= 0) return Matrix::zeros(n, n);

  const double floor = (k - 2) * top;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::max(d[i], d[j]) <= 0) {
        m(i, j) = floor;
      } else if (i == j) {
        m(i, j) = std::max(k * d[i], floor);
      } else {
        m(i, j) = std::max({(k - 1) * d[i], (k - 1) * d[j], floor});
      }
    }
  }
  return m;
}

Matrix pdiag_gamma_lambda(std::span<const double> d) {
  require_diagonal(d, "pdiag_gamma_lambda");
  const double lambda = std::max(max_of(d), 0.0);
  const Matrix normalized = scale(-lambda, Matrix::pdiag(d));
  const Matrix normalized_sq = scale(-2 * lambda, pdiag_power(d, 2));
  return add(normalized, normalized_sq);
}

SpectralSummary pdiag_eig(std::span<const double> d, Tolerance tol) {
  require_diagonal(d, "pdiag_eig");
  const std::size_t n = d.size();
  const double top = max_of(d);
  SpectralSummary out;
  if (top <= tol.tau) {
    out.lambda = 0.0;
    out.critical_nodes = all_nodes(n);
    out.classes = {out.critical_nodes};
    out.eigenbasis = {Vector(n, 0.0)};
    return out;
  }
  const Matrix m = Matrix::pdiag(d);
  out.lambda = top;
  for (std::size_t j = 0; j < n; ++j) {
    if (tol.equal(d[j], top)) {
      out.critical_nodes.push_back(j);
      out.classes.push_back({j});
      out.eigenbasis.push_back(m.column(j));
    }
  }
  return out;
}

Matrix pdiagable_gamma_lambda(const Matrix& a, Tolerance tol) {
  require_pdiagable(a, tol, "pdiagable_gamma_lambda");
  const double top = max_of(a.diagonal());
  if (top > tol.tau) {
    // Off-diagonal entries of A_lambda are already final. A diagonal entry
    // can still be raised by a 2-cycle, which weighs -2 top after scaling.
    Matrix g = scale(-top, a);
    for (std::size_t i = 0; i < a.rows(); ++i)
      g(i, i) = oplus(g(i, i), Scalar(-2 * top));
    return g;
  }
  return add(Matrix::identity(a.rows()), a);
}

SpectralSummary pdiagable_eig(const Matrix& a, Tolerance tol) {
  require_pdiagable(a, tol, "pdiagable_eig");
  const std::size_t n = a.rows();
  const std::vector<double> diag = a.diagonal();
  const double top = max_of(diag);
  SpectralSummary out;
  if (top > tol.tau) {
    out.lambda = top;
    for (std::size_t m = 0; m < n; ++m) {
      if (tol.equal(diag[m], top)) {
        out.critical_nodes.push_back(m);
        out.classes.push_back({m});
        out.eigenbasis.push_back(a.column(m));
      }
    }
    return out;
  }
  // Every cycle of length >= 2 weighs 0, so all nodes form one class.
  out.lambda = 0.0;
  out.critical_nodes = all_nodes(n);
  out.classes = {out.critical_nodes};
  Vector basis = a.column(0);
  basis[0] = 0.0;
  out.eigenbasis = {std::move(basis)};
  return out;
}

std::size_t pdiag_cyclicity(std::span<const double> d) {
  require_diagonal(d, "pdiag_cyclicity");
  return d.size() == 2 && max_of(d) < 0 ? 2 : 1;
}

StabilityReport pdiag_stability(std::span<const double> d) {
  require_diagonal(d, "pdiag_stability");
  if (d.size() == 2 && max_of(d) < 0)
    return {StabilityKind::WeaklyStable, "{x : x_1 = x_2}"};
  return {StabilityKind::StronglyStable, "all starting vectors"};
}

}  // namespace maxplus
