#include <gtest/gtest.h>

#include <random>

#include "tfim/eigh.hpp"
#include "tfim/errors.hpp"

namespace {

TEST(Eigh, TwoByTwo) {
  const Eigen::Matrix2d m{{2.0, 1.0}, {1.0, 2.0}};
  const auto e = tfim::eigh_symmetric(m);
  EXPECT_NEAR(e.values(0), 1.0, 1e-15);
  EXPECT_NEAR(e.values(1), 3.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), std::sqrt(0.5), 1e-15);
}

TEST(Eigh, AgreesWithSelfAdjointSolver) {
  std::mt19937 rng(7);
  std::normal_distribution<double> dist;
  Eigen::MatrixXd a = Eigen::MatrixXd::NullaryExpr(12, 12, [&] { return dist(rng); });
  a = (a + a.transpose()).eval();
  const auto mine = tfim::eigh_symmetric(a);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
  EXPECT_LT((mine.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
  const Eigen::MatrixXd recon = mine.vectors * mine.values.asDiagonal() * mine.vectors.transpose();
  EXPECT_LT((recon - a).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE((mine.vectors.transpose() * mine.vectors).isIdentity(1e-13));
}

TEST(Eigh, RejectsAsymmetricInput) {
  const Eigen::Matrix2d m{{1.0, 2.0}, {0.0, 1.0}};
  try {
    tfim::eigh_symmetric(m);
    FAIL();
  } catch (const tfim::Error& e) {
    EXPECT_EQ(e.code(), tfim::ErrorCode::NotSymmetric);
  }
}

}  // namespace
