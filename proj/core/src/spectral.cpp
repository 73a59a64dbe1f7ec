#include "maxplus/spectral.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Gamma without the finiteness check; used on normalized matrices that may
// contain epsilon.
Matrix closure_of(const Matrix& a) {
  Matrix term = a;
  Matrix sum = a;
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    term = mul(term, a);
    sum = add(sum, term);
  }
  return sum;
}

struct CriticalGraph {
  Matrix gamma;  // Gamma(A_lambda)
  std::vector<bool> critical;
  std::vector<std::vector<bool>> arc;
};

CriticalGraph critical_graph(const Matrix& a, Tolerance tol) {
  const Matrix normalized = normalize(a);
  const std::size_t n = a.rows();
  CriticalGraph g{closure_of(normalized), std::vector<bool>(n, false),
                  std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i) g.critical[i] = tol.is_zero(g.gamma(i, i));
  // (i, j) is critical iff it closes a zero-weight cycle.
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.critical[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.critical[j] && tol.is_zero(otimes(normalized(i, j), g.gamma(j, i))))
        g.arc[i][j] = true;
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> strong_components(
    const std::vector<std::vector<bool>>& arc, const std::vector<bool>& keep) {
  const std::size_t n = arc.size();
  // reach[i][j]: j reachable from i by a path of length >= 0.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    if (!keep[s]) continue;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    reach[s][s] = true;
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (arc[u][v] && !reach[s][v]) {
          reach[s][v] = true;
          frontier.push(v);
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i] || assigned[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j) {
      if (keep[j] && reach[i][j] && reach[j][i]) {
        cls.push_back(j);
        assigned[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

CriticalStructure structure_of(const CriticalGraph& g) {
  CriticalStructure s;
  for (std::size_t i = 0; i < g.critical.size(); ++i)
    if (g.critical[i]) s.nodes.push_back(i);
  s.classes = strong_components(g.arc, g.critical);
  return s;
}

}  // namespace

Cycle make_cycle(const Matrix& a, std::vector<std::size_t> nodes) {
  require_square(a, "make_cycle");
  if (nodes.empty()) throw DomainError("cycle needs at least one node");
  std::vector<bool> seen(a.rows(), false);
  for (std::size_t v : nodes) {
    if (v >= a.rows() || seen[v])
      throw DomainError("cycle nodes must be distinct indices in [n]");
    seen[v] = true;
  }
  Scalar weight = 0.0;
  for (std::size_t idx = 0; idx < nodes.size(); ++idx)
    weight = otimes(weight, a(nodes[idx], nodes[(idx + 1) % nodes.size()]));
  const Scalar mean = weight.is_eps()
                          ? Scalar::eps()
                          : Scalar(weight.value() /
                                   static_cast<double>(nodes.size()));
  return Cycle{std::move(nodes), weight, mean};
}

Scalar max_cycle_mean(const Matrix& a) {
  require_square(a, "max_cycle_mean");
  const std::size_t n = a.rows();
  // walk[k][v]: heaviest walk with exactly k arcs ending at v, from any start.
  std::vector<std::vector<double>> walk(n + 1, std::vector<double>(n, kNegInf));
  std::fill(walk[0].begin(), walk[0].end(), 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (walk[k - 1][u] == kNegInf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (a(u, v).is_eps()) continue;
        walk[k][v] = std::max(walk[k][v], walk[k - 1][u] + a(u, v).value());
      }
    }
  }
  double best = kNegInf;
  for (std::size_t v = 0; v < n; ++v) {
    if (walk[n][v] == kNegInf) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (walk[k][v] == kNegInf) continue;
      worst = std::min(worst,
                       (walk[n][v] - walk[k][v]) / static_cast<double>(n - k));
    }
    best = std::max(best, worst);
  }
  return Scalar(best);
}

Matrix normalize(const Matrix& a) {
  const Scalar lambda = max_cycle_mean(a);
  if (lambda.is_eps())
    throw DomainError("maximum cycle mean is epsilon (acyclic digraph)");
  return scale(inverse(lambda), a);
}

CriticalStructure critical_structure(const Matrix& a, Tolerance tol) {
  require_square(a, "critical_structure");
  return structure_of(critical_graph(a, tol));
}

Matrix transitive_closure(const Matrix& a) {
  require_square(a, "transitive_closure");
  require_finite(a, "transitive_closure");
  return closure_of(a);
}

SpectralSummary eigenbasis(const Matrix& a, Tolerance tol) {
  require_square(a, "eigenbasis");
  require_finite(a, "eigenbasis");
  const CriticalGraph g = critical_graph(a, tol);
  CriticalStructure s = structure_of(g);
  SpectralSummary out;
  out.lambda = max_cycle_mean(a);
  for (const auto& cls : s.classes) out.eigenbasis.push_back(g.gamma.column(cls.front()));
  out.critical_nodes = std::move(s.nodes);
  out.classes = std::move(s.classes);
  return out;
}

bool is_eigenvector(const Matrix& a, const Vector& x, Scalar lambda,
                    Tolerance tol) {
  require_square(a, "is_eigenvector");
  if (x.size() != a.rows()) throw ShapeError("is_eigenvector: size mismatch");
  if (is_eps_vector(x))
    throw DomainError("the epsilon vector is not an eigenvector");
  return approx_equal(mul(a, x), scale(lambda, x), tol);
}

std::size_t cyclicity(const Matrix& a, Tolerance tol) {
  require_square(a, "cyclicity");
  require_finite(a, "cyclicity");
  const CriticalGraph g = critical_graph(a, tol);
  const auto classes = strong_components(g.arc, g.critical);
  const std::size_t n = a.rows();
  std::size_t combined = 1;
  for (const auto& cls : classes) {
    std::vector<bool> member(n, false);
    for (std::size_t v : cls) member[v] = true;
    // BFS levels; every in-class arc u->v contributes level(u) + 1 - level(v).
    std::vector<long> level(n, -1);
    std::queue<std::size_t> frontier;
    level[cls.front()] = 0;
    frontier.push(cls.front());
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (member[v] && g.arc[u][v] && level[v] < 0) {
          level[v] = level[u] + 1;
          frontier.push(v);
        }
      }
    }
    long period = 0;
    for (std::size_t u : cls)
      for (std::size_t v : cls)
        if (g.arc[u][v]) period = std::gcd(period, level[u] + 1 - level[v]);
    if (period == 0) period = 1;
    combined = std::lcm(combined, static_cast<std::size_t>(period));
  }
  return combined;
}

std::optional<PeriodInfo> empirical_period(const Matrix& a, std::size_t k_max,
                                           Tolerance tol) {
  require_square(a, "empirical_period");
  require_finite(a, "empirical_period");
  if (k_max < 2) return std::nullopt;
  const Scalar lambda = max_cycle_mean(a);
  std::vector<Matrix> powers;  // powers[k - 1] = A^k
  powers.reserve(k_max);
  powers.push_back(a);
  while (powers.size() < k_max) powers.push_back(mul(powers.back(), a));

  // A candidate must be confirmed over at least one full period.
  for (std::size_t p = 1; 2 * p <= k_max; ++p) {
    const Scalar shift = real_power(lambda, static_cast<double>(p));
    std::size_t transient = k_max - p + 1;
    for (std::size_t k = k_max - p; k >= 1; --k) {
      if (!approx_equal(powers[k + p - 1], scale(shift, powers[k - 1]), tol)) break;
      transient = k;
    }
    if (transient + p <= k_max - p + 1) return PeriodInfo{p, transient};
  }
  return std::nullopt;
}

bool is_max_combination(const Vector& v, const std::vector<Vector>& generators,
                        Tolerance tol) {
  Vector combo(v.size());
  for (const Vector& g : generators) {
    if (g.size() != v.size()) throw ShapeError("generator size mismatch");
    double alpha = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (g[i].is_eps()) continue;
      alpha = std::min(alpha, v[i].value() - g[i].value());
    }
    if (alpha == std::numeric_limits<double>::infinity()) continue;
    const Scalar coeff = alpha == kNegInf ? Scalar::eps() : Scalar(alpha);
    for (std::size_t i = 0; i < v.size(); ++i)
      combo[i] = oplus(combo[i], otimes(coeff, g[i]));
  }
  return approx_equal(combo, v, tol);
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b,
               Tolerance tol) {
  return std::ranges::all_of(a, [&](const Vector& x) {
           return is_max_combination(x, b, tol);
         }) &&
         std::ranges::all_of(b, [&](const Vector& x) {
           return is_max_combination(x, a, tol);
         });
}

}  // namespace maxplus
