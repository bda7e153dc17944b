#include <gtest/gtest.h>

#include <functional>

#include "tfim/core_model.hpp"
#include "tfim/errors.hpp"

namespace {

using tfim::ErrorCode;
using tfim::ModelKind;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const tfim::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no tfim::Error thrown";
  return ErrorCode::InvalidParameter;
}

TEST(Couplings, ImpurityProfileIsScaledByField) {
  const auto c = tfim::build_couplings(ModelKind::Impurity, 6, 1.0, 3.0, 2.0);
  ASSERT_EQ(c.size(), 5);
  const Eigen::VectorXd expected = (Eigen::VectorXd(5) << 0.5, 0.5, 1.5, 0.5, 0.5).finished();
  EXPECT_TRUE(c.isApprox(expected));
}

TEST(Couplings, JunctionProfileSplitsAtCentre) {
  const auto c = tfim::build_couplings(ModelKind::Junction, 7, 1.0, 4.0, 1.0);
  const Eigen::VectorXd expected = (Eigen::VectorXd(6) << 1, 1, 1, 4, 4, 4).finished();
  EXPECT_TRUE(c.isApprox(expected));
}

TEST(Couplings, ParityAndRangeAreChecked) {
  EXPECT_EQ(code_of([] { tfim::make_chain(ModelKind::Impurity, 5, 1, 1, 1); }), ErrorCode::InvalidModelSize);
  EXPECT_EQ(code_of([] { tfim::make_chain(ModelKind::Junction, 6, 1, 1, 1); }), ErrorCode::InvalidModelSize);
  EXPECT_EQ(code_of([] { tfim::make_chain(ModelKind::Impurity, 4, 1, 1, 0.0); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { tfim::make_chain(ModelKind::Impurity, 4, 1, -1, 1); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { tfim::parse_model_kind("ladder"); }), ErrorCode::InvalidParameter);
}

TEST(QuadraticForm, TwoSiteMatrix) {
  const Eigen::VectorXd c = Eigen::VectorXd::Constant(1, 1.0);
  const Eigen::Matrix2d expected{{1.0, -1.0}, {-1.0, 2.0}};
  EXPECT_TRUE(tfim::build_quadratic_form(c).isApprox(expected));
}

TEST(QuadraticForm, EqualsGramOfDifferenceOperator) {
  const Eigen::VectorXd c = (Eigen::VectorXd(4) << 0.3, 2.0, 0.7, 1.1).finished();
  const Eigen::MatrixXd d = tfim::difference_operator(c);
  EXPECT_DOUBLE_EQ(d(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(d(1, 2), 2.0);
  EXPECT_DOUBLE_EQ(d(2, 1), 0.0);
  EXPECT_TRUE(tfim::build_quadratic_form(c).isApprox(d.transpose() * d));
  EXPECT_NEAR(std::abs(d.determinant()), 1.0, 1e-14);
}

TEST(CenterPair, FollowsTheModifiedBond) {
  EXPECT_EQ(tfim::center_pair(tfim::make_chain(ModelKind::Impurity, 10, 1, 2, 1)), std::make_pair(5, 6));
  EXPECT_EQ(tfim::center_pair(tfim::make_chain(ModelKind::Junction, 9, 1, 2, 1)), std::make_pair(4, 5));
  EXPECT_EQ(tfim::center_pair(tfim::make_custom_chain(Eigen::VectorXd::Ones(6))), std::make_pair(3, 4));
}

}  // namespace
