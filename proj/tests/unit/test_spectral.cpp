#include <gtest/gtest.h>

#include "maxplus/errors.hpp"
#include "maxplus/genperm.hpp"
#include "maxplus/spectral.hpp"
#include "oracle.hpp"

namespace maxplus {
namespace {

const Scalar eps = Scalar::eps();

Matrix example_3x3() { return {{3, 1, 2}, {-1, 0, 1}, {-2, -1, 5}}; }

Matrix pd(std::vector<double> d) { return Matrix::pdiag(d); }

using Classes = std::vector<std::vector<std::size_t>>;

TEST(MaxCycleMean, Examples) {
  EXPECT_EQ(max_cycle_mean(pd({-1, -2})), Scalar(0));
  EXPECT_EQ(max_cycle_mean(example_3x3()), Scalar(5));
  EXPECT_TRUE(max_cycle_mean(Matrix(2, 2)).is_eps());
  EXPECT_EQ(max_cycle_mean(Matrix{{eps, 3}, {1, eps}}), Scalar(2));
  EXPECT_EQ(max_cycle_mean(Matrix{{eps, 3}, {eps, eps}}), eps);
}

TEST(MaxCycleMean, MatchesCycleEnumeration) {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix a = oracle::random_matrix(rng, n, -10, 10);
    if (trial % 3 == 0)  // sprinkle epsilons to exercise sparse digraphs
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (oracle::uniform_int(rng, 0, 2) == 0) a(i, j) = eps;
    const double expected = oracle::max_cycle_mean(oracle::to_grid(a));
    const Scalar got = max_cycle_mean(a);
    if (expected == oracle::kEps) {
      EXPECT_TRUE(got.is_eps());
    } else {
      EXPECT_NEAR(got.value(), expected, 1e-9);
    }
  }
}

TEST(Cycle, WeightAndMean) {
  const Cycle c = make_cycle(example_3x3(), {0, 2});
  EXPECT_EQ(c.weight, Scalar(0));
  EXPECT_EQ(c.mean, Scalar(0));
  EXPECT_EQ(c.length(), 2u);
  EXPECT_THROW(make_cycle(example_3x3(), {0, 0}), DomainError);
  EXPECT_THROW(make_cycle(example_3x3(), {}), DomainError);
  EXPECT_TRUE(make_cycle(Matrix{{eps, 1}, {eps, 0}}, {0, 1}).mean.is_eps());
}

TEST(CriticalStructure, Examples) {
  const CriticalStructure d = critical_structure(pd({1, 1, -3}));
  EXPECT_EQ(d.nodes, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(d.classes, (Classes{{0}, {1}}));

  const CriticalStructure one = critical_structure(Matrix{{5}});
  EXPECT_EQ(one.nodes, (std::vector<std::size_t>{0}));
  EXPECT_EQ(one.classes, (Classes{{0}}));

  EXPECT_THROW(critical_structure(Matrix(2, 2)), DomainError);
}

TEST(CriticalStructure, NonPositivePseudoDiagonalizableHasOneClass) {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto d = oracle::uniform_vector(rng, n, -5, 0);
    const Matrix a = oracle::random_pdiagable(rng, n, d);
    const CriticalStructure cs = critical_structure(a);
    ASSERT_EQ(cs.classes.size(), 1u);
    EXPECT_EQ(cs.nodes.size(), n);
  }
}

TEST(CriticalStructure, MatchesCycleEnumeration) {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    // Small integer entries make ties between cycles common.
    const Matrix a = oracle::random_int_matrix(rng, n, -3, 3);
    const auto expected = oracle::critical_by_enumeration(oracle::to_grid(a), 1e-9);
    const CriticalStructure got = critical_structure(a);
    EXPECT_EQ(got.nodes, expected.nodes);
    EXPECT_EQ(got.classes, expected.classes);
    EXPECT_EQ(cyclicity(a), expected.cyclicity);
  }
}

TEST(TransitiveClosure, Examples) {
  EXPECT_EQ(transitive_closure(pd({-1, -3, 0})), Matrix::zeros(3, 3));
  EXPECT_EQ(transitive_closure(Matrix{{0}}), Matrix{{0}});
  EXPECT_THROW(transitive_closure(Matrix{{0, eps}, {0, 0}}), DomainError);
}

TEST(TransitiveClosure, MatchesDefinition) {
  oracle::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 1 + trial % 6, -10, 10);
    const auto expected = oracle::closure(oracle::to_grid(a));
    EXPECT_LE(oracle::max_abs_diff(oracle::to_grid(transitive_closure(a)), expected),
              1e-9);
  }
}

TEST(Normalize, ShiftsByLambda) {
  EXPECT_EQ(normalize(example_3x3()), scale(-5, example_3x3()));
  EXPECT_THROW(normalize(Matrix(2, 2)), DomainError);
}

TEST(Eigenbasis, ThreeByThreeExample) {
  const SpectralSummary s = eigenbasis(example_3x3());
  EXPECT_EQ(s.lambda, Scalar(5));
  ASSERT_EQ(s.dimension(), 1u);
  EXPECT_TRUE(same_span(s.eigenbasis, {Vector{2, 1, 5}}));
  EXPECT_TRUE(is_eigenvector(example_3x3(), Vector{2, 1, 5}, 5));
}

TEST(Eigenbasis, PseudoDiagonalWithRepeatedMaximum) {
  const SpectralSummary s = eigenbasis(pd({-1, 2, 2}));
  EXPECT_EQ(s.lambda, Scalar(2));
  ASSERT_EQ(s.dimension(), 2u);
  EXPECT_TRUE(same_span(s.eigenbasis, {Vector{0, 2, 0}, Vector{0, 0, 2}}));
}

TEST(Eigenbasis, OneByOne) {
  const SpectralSummary s = eigenbasis(Matrix{{-4.5}});
  EXPECT_EQ(s.lambda, Scalar(-4.5));
  EXPECT_EQ(s.eigenbasis, (std::vector<Vector>{Vector{0}}));
}

TEST(Eigenbasis, RandomMatricesSatisfyContract) {
  oracle::Rng rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Matrix a = trial % 2 ? oracle::random_int_matrix(rng, n, -4, 4)
                               : oracle::random_matrix(rng, n, -10, 10);
    const SpectralSummary s = eigenbasis(a);
    EXPECT_EQ(s.dimension(), s.classes.size());
    std::size_t covered = 0;
    for (const auto& c : s.classes) covered += c.size();
    EXPECT_EQ(covered, s.critical_nodes.size());
    for (std::size_t k = 0; k < s.eigenbasis.size(); ++k) {
      const Vector& x = s.eigenbasis[k];
      for (Scalar v : x) EXPECT_TRUE(v.is_finite());
      EXPECT_LE(max_abs_difference(mul(a, x), scale(s.lambda, x)), 1e-9);
      std::vector<Vector> others = s.eigenbasis;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
      if (!others.empty()) EXPECT_FALSE(is_max_combination(x, others));
    }
  }
}

TEST(Eigenbasis, SimilarityCarriesEigenvectors) {
  oracle::Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix a = oracle::random_matrix(rng, n, -10, 10);
    const GenPermMatrix p = oracle::random_genperm(rng, n);
    const Matrix b = conjugate(a, p);
    const SpectralSummary s = eigenbasis(a);
    for (const Vector& x : s.eigenbasis)
      EXPECT_TRUE(is_eigenvector(b, p.apply(x), s.lambda));
  }
}

TEST(IsEigenvector, Examples) {
  EXPECT_TRUE(is_eigenvector(pd({1, -1}), Vector{1, 0}, 1));
  EXPECT_FALSE(is_eigenvector(pd({1, -1}), Vector{0, 0}, 1));
  EXPECT_THROW(is_eigenvector(pd({1, -1}), Vector{eps, eps}, 1), DomainError);
}

TEST(Cyclicity, Examples) {
  EXPECT_EQ(cyclicity(pd({-2, -1})), 2u);
  EXPECT_EQ(cyclicity(pd({1, 2})), 1u);
  EXPECT_EQ(cyclicity(Matrix{{0}}), 1u);
}

Matrix two_and_three_cycle() {
  Matrix a(5, 5, Scalar(-10));
  a(0, 1) = 0;
  a(1, 0) = 0;
  a(2, 3) = 0;
  a(3, 4) = 0;
  a(4, 2) = 0;
  return a;
}

TEST(Cyclicity, CombinesComponentsByLcm) {
  const Matrix a = two_and_three_cycle();
  EXPECT_EQ(critical_structure(a).classes, (Classes{{0, 1}, {2, 3, 4}}));
  EXPECT_EQ(cyclicity(a), 6u);
  const auto info = empirical_period(a, 60);
  ASSERT_TRUE(info.has_value());
  EXPECT_EQ(info->period, 6u);
}

TEST(EmpiricalPeriod, Examples) {
  const auto two = empirical_period(pd({-2, -1}), 20);
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->period, 2u);

  const auto one = empirical_period(pd({1, 2}), 10);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->period, 1u);

  const auto trivial = empirical_period(Matrix{{0}}, 5);
  ASSERT_TRUE(trivial.has_value());
  EXPECT_EQ(trivial->period, 1u);
  EXPECT_EQ(trivial->transient, 1u);
}

TEST(EmpiricalPeriod, NeedsRoomToConfirm) {
  // Period 2 cannot be confirmed from A^1..A^3 alone.
  EXPECT_FALSE(empirical_period(pd({-2, -1}), 3).has_value());
}

TEST(EmpiricalPeriod, EqualsCyclicityOnRandomMatrices) {
  oracle::Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix a = oracle::random_int_matrix(rng, n, -9, 9);
    const auto info = empirical_period(a, 60);
    ASSERT_TRUE(info.has_value()) << "horizon too short at trial " << trial;
    EXPECT_EQ(info->period, cyclicity(a));
    const auto expected = oracle::period_by_iteration(
        oracle::to_grid(a), max_cycle_mean(a).value(), 60, 1e-9);
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(info->period, *expected);
  }
}

TEST(MaxCombination, Residuation) {
  const std::vector<Vector> gens{{0, 2, 0}, {0, 0, 2}};
  EXPECT_TRUE(is_max_combination(Vector{1, 3, 3}, gens));
  EXPECT_FALSE(is_max_combination(Vector{5, 0, 0}, gens));
  EXPECT_TRUE(same_span({{0, 2, 0}}, {{-1, 1, -1}}));
  EXPECT_FALSE(same_span(gens, {{0, 2, 0}}));
}

}  // namespace
}  // namespace maxplus
