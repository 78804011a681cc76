#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/Dense>

#include "cayley/errors.hpp"
#include "cayley/permgroup.hpp"
#include "cayley/yor.hpp"
#include "support/oracles.hpp"

using cayley::Partition;
using cayley::Permutation;

TEST(Yor, TrivialAndSignGenerators) {
  for (int n = 2; n <= 6; ++n) {
    auto triv = cayley::build_evaluator(Partition::row(n));
    auto sign = cayley::build_evaluator(Partition::column(n));
    for (int i = 1; i < n; ++i) {
      EXPECT_DOUBLE_EQ(triv.generator(i)(0, 0), 1.0);
      EXPECT_DOUBLE_EQ(sign.generator(i)(0, 0), -1.0);
    }
  }
}

TEST(Yor, TwoOneMatricesInTableauOrder) {
  auto ev = cayley::build_evaluator(Partition({2, 1}));
  ASSERT_EQ(ev.dim(), 2);
  // Tableaux 12/3 then 13/2.
  Eigen::Matrix2d g1;
  g1 << 1, 0, 0, -1;
  Eigen::Matrix2d g2;
  const double s = std::sqrt(3.0) / 2.0;
  g2 << -0.5, s, s, 0.5;
  EXPECT_TRUE(ev.generator(1).isApprox(g1, 1e-14));
  EXPECT_TRUE(ev.generator(2).isApprox(g2, 1e-14));
}

TEST(Yor, AdjacentWordReproducesPermutation) {
  for (const auto& p : cayley::all_permutations(5)) {
    auto word = cayley::adjacent_word(p);
    Permutation q = Permutation::identity(5);
    for (int letter : word) q = q * Permutation::transposition(5, letter, letter + 1);
    EXPECT_EQ(q, p);
  }
}

TEST(Yor, IdentityMapsToIdentity) {
  auto ev = cayley::build_evaluator(Partition({3, 2, 1}));
  auto m = ev.evaluate(Permutation::identity(6));
  EXPECT_TRUE(m.isApprox(Eigen::MatrixXd::Identity(16, 16)));
}

TEST(Yor, GeneratorsSatisfyCoxeterRelations) {
  for (const auto& shape : {Partition({3, 2}), Partition({3, 1, 1}), Partition({2, 2, 1})}) {
    auto ev = cayley::build_evaluator(shape);
    const auto id = Eigen::MatrixXd::Identity(ev.dim(), ev.dim());
    for (int i = 1; i < 5; ++i) {
      EXPECT_TRUE((ev.generator(i) * ev.generator(i)).isApprox(id, 1e-12));
      if (i + 1 < 5) {
        auto a = ev.generator(i);
        auto b = ev.generator(i + 1);
        EXPECT_TRUE((a * b * a).isApprox(b * a * b, 1e-12));
      }
      for (int j = i + 2; j < 5; ++j) {
        EXPECT_TRUE((ev.generator(i) * ev.generator(j)).isApprox(ev.generator(j) * ev.generator(i), 1e-12));
      }
    }
  }
}

TEST(Yor, HomomorphismAndOrthogonality) {
  auto ev = cayley::build_evaluator(Partition({3, 1, 1}));
  auto group = cayley::all_permutations(5);
  for (std::size_t i = 0; i < group.size(); i += 7) {
    for (std::size_t j = 0; j < group.size(); j += 11) {
      Eigen::MatrixXd lhs = ev.evaluate(group[i] * group[j]);
      Eigen::MatrixXd rhs = ev.evaluate(group[i]) * ev.evaluate(group[j]);
      EXPECT_TRUE(lhs.isApprox(rhs, 1e-12));
    }
    Eigen::MatrixXd m = ev.evaluate(group[i]);
    EXPECT_TRUE((m * m.transpose()).isApprox(Eigen::MatrixXd::Identity(ev.dim(), ev.dim()), 1e-12));
  }
}

TEST(Yor, TranspositionTraceOnStandardRepresentation) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> parts{n - 1, 1};
    auto ev = cayley::build_evaluator(Partition(parts));
    EXPECT_NEAR(ev.evaluate(Permutation::transposition(n, 1, n)).trace(), n - 3, 1e-12);
  }
}

TEST(Yor, SignRepresentationIsSign) {
  auto ev = cayley::build_evaluator(Partition::column(5));
  for (const auto& p : cayley::all_permutations(5)) {
    EXPECT_DOUBLE_EQ(ev.evaluate(p)(0, 0), static_cast<double>(p.sign()));
  }
}

TEST(Yor, SumOnTrivialIsSetSize) {
  auto h = cayley::enum_cycles(6, 5, 2);
  auto ev = cayley::build_evaluator(Partition::row(6));
  EXPECT_DOUBLE_EQ(ev.sum_over_set(h)(0, 0), static_cast<double>(h.size()));
}

TEST(Yor, FullFiveCycleClassVanishesOnFiveOne) {
  // chi_(5,1) on a 5-cycle of S_6 is zero, so the class sum is the zero scalar.
  auto h = cayley::enum_cycles(6, 5, 0);
  auto m = cayley::build_evaluator(Partition({5, 1})).sum_over_set(h);
  EXPECT_LT(m.cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Yor, StandardBlockOfFourCyclesMovingOne) {
  auto h = cayley::enum_cycles(5, 4, 1);
  Eigen::MatrixXd m = cayley::build_evaluator(Partition({4, 1})).sum_over_set(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  auto ev = es.eigenvalues();
  ASSERT_EQ(ev.size(), 4);
  EXPECT_NEAR(ev(0), -6.0, 1e-9);
  EXPECT_NEAR(ev(1), 2.0, 1e-9);
  EXPECT_NEAR(ev(2), 2.0, 1e-9);
  EXPECT_NEAR(ev(3), 2.0, 1e-9);
}

TEST(Yor, SumIsBitIdenticalAcrossWorkerCounts) {
  auto h = cayley::enum_cycles(7, 6, 2);
  auto ev = cayley::build_evaluator(Partition({4, 2, 1}));
  Eigen::MatrixXd one = ev.sum_over_set(h, 1);
  for (int workers : {2, 3, 5}) {
    Eigen::MatrixXd many = ev.sum_over_set(h, workers);
    EXPECT_EQ((one - many).cwiseAbs().maxCoeff(), 0.0) << workers;
  }
}

TEST(Yor, DimensionCapIsEnforced) {
  EXPECT_THROW(cayley::build_evaluator(Partition({4, 3, 1}), 10), cayley::CapExceeded);
  EXPECT_THROW(cayley::build_evaluator(Partition::row(9)), cayley::ParameterError);
}
