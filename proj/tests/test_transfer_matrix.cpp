#include <gtest/gtest.h>

#include <cmath>

#include "tfim/analytic.hpp"
#include "tfim/core_model.hpp"
#include "tfim/errors.hpp"
#include "tfim/numeric_solver.hpp"
#include "tfim/transfer_matrix.hpp"

namespace {

TEST(Transfer, StepMatrixAlgebra) {
  EXPECT_DOUBLE_EQ(tfim::transfer_step(1.7).determinant(), 1.0);
  const Eigen::Matrix2d t0 = tfim::transfer_step(0.0);
  EXPECT_TRUE((t0 * t0 * t0 * t0).isIdentity(0.0));
  const Eigen::Vector2cd ev = tfim::transfer_step(3.0).eigenvalues();
  const double top = std::max(ev(0).real(), ev(1).real());
  EXPECT_NEAR(top, (3.0 + std::sqrt(5.0)) / 2.0, 1e-14);
}

TEST(Transfer, FixedPointAtBandEdge) {
  const auto s = tfim::propagate({1.0, 1.0}, 2.0, 12);
  EXPECT_DOUBLE_EQ(s.current, 1.0);
  EXPECT_DOUBLE_EQ(s.previous, 1.0);
}

TEST(Transfer, GeneratesCosineSequence) {
  const double theta = 0.37;
  const auto s = tfim::propagate({std::cos(2 * theta), std::cos(theta)}, 2.0 * std::cos(theta), 7);
  EXPECT_NEAR(s.current, std::cos(7 * theta), 1e-14);
  EXPECT_NEAR(s.previous, std::cos(6 * theta), 1e-14);
  EXPECT_THROW(tfim::propagate({1.0, 0.0}, 1.0, 1), tfim::Error);
}

TEST(Transfer, SegmentsOfBothProfiles) {
  const auto imp = tfim::homogeneous_segments(tfim::make_chain(tfim::ModelKind::Impurity, 10, 1, 2, 1).couplings);
  ASSERT_EQ(imp.size(), 2u);
  EXPECT_EQ(imp[0].first, 1);
  EXPECT_EQ(imp[0].last, 5);
  EXPECT_EQ(imp[1].first, 6);
  EXPECT_EQ(imp[1].last, 10);
  const auto jun = tfim::homogeneous_segments(tfim::make_chain(tfim::ModelKind::Junction, 9, 1, 2, 1).couplings);
  ASSERT_EQ(jun.size(), 2u);
  EXPECT_EQ(jun[0].last, 5);
  EXPECT_EQ(jun[1].first, 5);
  EXPECT_EQ(jun[1].last, 9);
  EXPECT_DOUBLE_EQ(jun[1].coupling, 2.0);
  const auto uni = tfim::homogeneous_segments(Eigen::VectorXd::Ones(5));
  ASSERT_EQ(uni.size(), 1u);
  EXPECT_EQ(uni[0].first, 1);
  EXPECT_EQ(uni[0].last, 6);
}

TEST(Transfer, DeviationDetectsPerturbation) {
  const double theta = 0.9;
  Eigen::VectorXd row(6);
  for (int i = 0; i < 6; ++i) row(i) = std::sin((i + 1) * theta);
  const tfim::Segment seg{1, 6, 1.0};
  EXPECT_LT(tfim::segment_deviation(row, seg, 2.0 * std::cos(theta)), 1e-14);
  row(3) += 1e-3;
  EXPECT_NEAR(tfim::segment_deviation(row, seg, 2.0 * std::cos(theta)), 1e-3, 1e-12);
}

TEST(Transfer, ReproducesClosedFormRows) {
  const auto spec = tfim::make_chain(tfim::ModelKind::Impurity, 10, 1.0, 0.5, 1.5);
  const auto s = tfim::solve_impurity(spec);
  for (int q = 0; q < 10; ++q) {
    const double e = 2.0 * s.modes[q].cos_value();
    const double d = tfim::max_segment_deviation(s.solution.phi.row(q).transpose(), spec.couplings,
                                                 [e](const tfim::Segment&) { return e; });
    EXPECT_LT(d, 1e-10) << "mode " << q;
  }
}

}  // namespace
