#include <gtest/gtest.h>

#include <algorithm>

#include "maxplus/errors.hpp"
#include "maxplus/genperm.hpp"
#include "maxplus/special.hpp"
#include "oracle.hpp"

namespace maxplus {
namespace {

using Nodes = std::vector<std::size_t>;

Matrix pd(std::vector<double> d) { return Matrix::pdiag(d); }

Matrix separable_from(const std::vector<double>& u, const std::vector<double>& v) {
  Matrix a(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) a(i, j) = u[i] + v[j];
  return a;
}

std::vector<double> quarter_vector(oracle::Rng& rng, std::size_t n, int lo, int hi) {
  std::vector<double> d(n);
  for (double& x : d) x = oracle::uniform_int(rng, 4 * lo, 4 * hi) / 4.0;
  return d;
}

// Diagonal with one entry >= 0 and the rest <= 0, i.e. an optimal-node
// pattern for pseudo-diagonalizable matrices.
std::vector<double> optimal_node_diagonal(oracle::Rng& rng, std::size_t n) {
  std::vector<double> d = quarter_vector(rng, n, -4, 0);
  d[static_cast<std::size_t>(oracle::uniform_int(rng, 0, int(n) - 1))] =
      oracle::uniform_int(rng, 0, 16) / 4.0;
  return d;
}

TEST(OptimalNodes, Examples) {
  EXPECT_EQ(optimal_nodes(pd({1, -1})).nodes, (Nodes{0}));
  EXPECT_FALSE(optimal_nodes(Matrix{{0, 1}, {1, 0}}).is_optimal_node());
  EXPECT_EQ(optimal_nodes(pd({0, 0, 0})).nodes, (Nodes{0, 1, 2}));
  EXPECT_THROW(optimal_nodes(Matrix{{0, Scalar::eps()}, {0, 0}}), DomainError);
}

TEST(OptimalNodes, MatchesQuadrupleOracle) {
  oracle::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix a = trial % 2 ? oracle::random_int_matrix(rng, n, -2, 2)
                               : oracle::random_pdiagable(rng, n, quarter_vector(rng, n, -2, 2));
    EXPECT_EQ(optimal_nodes(a).nodes,
              oracle::optimal_nodes_by_quadruples(oracle::to_grid(a), 1e-9));
  }
}

TEST(OptimalNodeEig, Examples) {
  const SpectralSummary s = optimal_node_eig(pd({1, -1}));
  EXPECT_EQ(s.lambda, Scalar(1));
  EXPECT_EQ(s.eigenbasis, (std::vector<Vector>{{1, 0}}));

  const SpectralSummary z = optimal_node_eig(pd({0, 0, 0}));
  EXPECT_EQ(z.lambda, Scalar(0));
  EXPECT_EQ(z.eigenbasis, (std::vector<Vector>{{0, 0, 0}}));

  EXPECT_THROW(optimal_node_eig(Matrix{{0, 1}, {1, 0}}), DomainError);
}

TEST(OptimalNodeEig, PseudoDiagonalizableWithOneNonNegativeDiagonal) {
  oracle::Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto d = optimal_node_diagonal(rng, n);
    const Matrix a = oracle::random_pdiagable(rng, n, d);
    const auto diag = a.diagonal();
    const auto k = static_cast<std::size_t>(
        std::max_element(diag.begin(), diag.end()) - diag.begin());
    const SpectralSummary s = optimal_node_eig(a);
    EXPECT_NEAR(s.lambda.value(), a(k, k).value(), 1e-9);
    ASSERT_EQ(s.dimension(), 1u);
    EXPECT_TRUE(same_span(s.eigenbasis, {a.column(k)}));
  }
}

TEST(OptimalNodeEig, AgreesWithGeneralEigenbasis) {
  oracle::Rng rng(53);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix a = oracle::random_int_matrix(rng, n, -3, 3);
    if (!optimal_nodes(a).is_optimal_node()) continue;
    ++checked;
    const SpectralSummary s = optimal_node_eig(a);
    const SpectralSummary ref = eigenbasis(a);
    EXPECT_EQ(s.lambda, ref.lambda);
    EXPECT_TRUE(same_span(s.eigenbasis, ref.eigenbasis));
  }
  EXPECT_GT(checked, 50);
}

TEST(OptimalNodes, MapThroughPermutationUnderSimilarity) {
  oracle::Rng rng(54);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Matrix a = trial % 2
        ? oracle::random_pdiagable(rng, n, optimal_node_diagonal(rng, n))
        : separable_from(quarter_vector(rng, n, -5, 5), quarter_vector(rng, n, -5, 5));
    const GenPermMatrix p = oracle::random_genperm(rng, n);
    const Nodes before = optimal_nodes(a).nodes;
    ASSERT_FALSE(before.empty());
    // P^-1 A P
    const Nodes after = optimal_nodes(conjugate(a, p.inverse())).nodes;
    Nodes mapped;
    for (std::size_t k : before) mapped.push_back(p.perm()[k]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(after, mapped);
  }
}

TEST(SeparableFactor, Examples) {
  const auto f = separable_factor(Matrix{{2, 3}, {1, 2}});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->u, (std::vector<double>{0, -1}));
  EXPECT_EQ(f->v, (std::vector<double>{2, 3}));

  EXPECT_TRUE(separable_factor(pd({1, -1})).has_value());
  EXPECT_FALSE(separable_factor(pd({1, 1})).has_value());
}

TEST(SeparableFactor, RecoversRandomFactorizations) {
  oracle::Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Matrix a = separable_from(oracle::uniform_vector(rng, n, -10, 10),
                                    oracle::uniform_vector(rng, n, -10, 10));
    const auto f = separable_factor(a);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->u[0], 0.0);
    EXPECT_TRUE(approx_equal(separable_from(f->u, f->v), a));
  }
}

TEST(SeparableFactor, MatchesQuadrupleOracle) {
  oracle::Rng rng(56);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix a = separable_from(quarter_vector(rng, n, -3, 3), quarter_vector(rng, n, -3, 3));
    if (trial % 2) {
      const auto i = static_cast<std::size_t>(oracle::uniform_int(rng, 0, int(n) - 1));
      const auto j = static_cast<std::size_t>(oracle::uniform_int(rng, 0, int(n) - 1));
      a(i, j) = a(i, j).value() + oracle::uniform_int(rng, -1, 1) * 0.25;
    }
    EXPECT_EQ(separable_factor(a).has_value(),
              oracle::separable_by_quadruples(oracle::to_grid(a), 1e-9));
  }
}

TEST(SeparableFactor, PreservedUnderSimilarity) {
  oracle::Rng rng(57);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Matrix a = trial % 2
        ? separable_from(oracle::uniform_vector(rng, n, -5, 5), oracle::uniform_vector(rng, n, -5, 5))
        : oracle::random_matrix(rng, n, -5, 5);
    const GenPermMatrix p = oracle::random_genperm(rng, n);
    EXPECT_EQ(separable_factor(a).has_value(),
              separable_factor(conjugate(a, p)).has_value());
  }
}

TEST(Symmetrize, Examples) {
  const auto [p, s] = symmetrize_separable(Matrix{{2, 3}, {1, 2}});
  EXPECT_EQ(p, GenPermMatrix::diagonal(std::vector<double>{1, 2}));
  EXPECT_EQ(s, (Matrix{{2, 2}, {2, 2}}));

  const Matrix sym = separable_from({1, -2, 3}, {1, -2, 3});
  const auto [q, t] = symmetrize_separable(sym);
  // Gauge u_1 = 0 turns u = v into a constant p, which conjugates trivially.
  const auto w = q.weights();
  EXPECT_TRUE(std::all_of(w.begin(), w.end(), [&](double x) { return x == w[0]; }));
  EXPECT_EQ(t, sym);

  const auto [r, z] = symmetrize_separable(Matrix::zeros(3, 3));
  EXPECT_EQ(z, Matrix::zeros(3, 3));

  EXPECT_THROW(symmetrize_separable(pd({1, 1})), DomainError);
}

TEST(Symmetrize, RandomSeparableBecomesSymmetric) {
  oracle::Rng rng(58);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto u = oracle::uniform_vector(rng, n, -5, 5);
    const auto v = oracle::uniform_vector(rng, n, -5, 5);
    const auto [p, s] = symmetrize_separable(separable_from(u, v));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_NEAR(s(i, j).value(), s(j, i).value(), 1e-9);
        EXPECT_NEAR(s(i, j).value(), (u[i] + v[i] + u[j] + v[j]) / 2, 1e-9);
      }
  }
}

TEST(ClassifyPdiagable, Examples) {
  EXPECT_EQ(classify_pdiagable_special(Matrix{{3, 1, 2}, {-1, 0, 1}, {-2, -1, 5}}),
            (PDiagableClassification{false, false, std::nullopt}));
  EXPECT_EQ(classify_pdiagable_special(Matrix{{-1, 1}, {-1, -2}}),
            (PDiagableClassification{false, false, std::nullopt}));
  EXPECT_EQ(classify_pdiagable_special(pd({0, 0, 0})),
            (PDiagableClassification{true, true, 0}));
  EXPECT_THROW(classify_pdiagable_special(Matrix{{0, 1}, {1, 0}}), DomainError);
}

TEST(ClassifyPdiagable, MatchesBruteForceDefinitions) {
  oracle::Rng rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<double> d;
    switch (trial % 4) {
      case 0: d = optimal_node_diagonal(rng, n); break;
      case 1: d.assign(n, 0.0); break;
      case 2: d = quarter_vector(rng, n, -1, 1); break;
      default: d = {0.75, -0.75}; d.resize(n, 0.0); break;
    }
    const Matrix a = oracle::random_pdiagable(rng, n, d);
    const PDiagableClassification c = classify_pdiagable_special(a);
    const auto grid = oracle::to_grid(a);
    const auto nodes = oracle::optimal_nodes_by_quadruples(grid, 1e-9);
    EXPECT_EQ(c.separable, oracle::separable_by_quadruples(grid, 1e-9)) << "trial " << trial;
    EXPECT_EQ(c.optimal_node, !nodes.empty()) << "trial " << trial;
    if (c.node) {
      EXPECT_TRUE(std::find(nodes.begin(), nodes.end(), *c.node) != nodes.end());
    }
  }
}

TEST(ClassifyPdiagable, PseudoDiagonalOptimalNodeCriterion) {
  oracle::Rng rng(60);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto d = trial % 2 ? optimal_node_diagonal(rng, n) : quarter_vector(rng, n, -2, 2);
    bool expected = false;
    for (std::size_t k = 0; k < n; ++k) {
      bool ok = d[k] >= 0;
      for (std::size_t i = 0; i < n; ++i)
        if (i != k && d[i] > 0) ok = false;
      expected = expected || ok;
    }
    EXPECT_EQ(optimal_nodes(Matrix::pdiag(d)).is_optimal_node(), expected);
    EXPECT_EQ(classify_pdiagable_special(Matrix::pdiag(d)).optimal_node, expected);
  }
}

}  // namespace
}  // namespace maxplus
