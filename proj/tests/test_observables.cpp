#include <gtest/gtest.h>

#include <cmath>

#include "tfim/core_model.hpp"
#include "tfim/ed_oracle.hpp"
#include "tfim/errors.hpp"
#include "tfim/numeric_solver.hpp"
#include "tfim/observables.hpp"

namespace {

TEST(Observables, TwoSiteGolden) {
  // Ground state of [[-2, -1], [-1, 2]] in the even sector, J = h = 1.
  const auto sol = tfim::solve_numeric(Eigen::VectorXd::Ones(1));
  const auto g = tfim::green_matrix(sol);
  const double s5 = std::sqrt(5.0);
  EXPECT_NEAR(tfim::magnetization_total(sol), 2.0 / s5, 1e-14);
  EXPECT_NEAR(tfim::magnetization_site(sol, 1), 2.0 / s5, 1e-14);
  EXPECT_NEAR(tfim::corr_xx(g, 1, 2), 1.0 / s5, 1e-14);
  EXPECT_NEAR(tfim::corr_yy(g, 1, 2), -1.0 / s5, 1e-14);
  EXPECT_NEAR(tfim::corr_zz(g, 1, 2), 1.0, 1e-14);
  EXPECT_NEAR(tfim::energy_gap(sol), s5 - 1.0, 1e-14);
  EXPECT_FALSE(g.zero_mode_flag);
}

TEST(Observables, EqualRowsGiveMinusIdentity) {
  tfim::FermionSolution sol;
  sol.lambdas = Eigen::VectorXd::Ones(3);
  sol.phi = Eigen::MatrixXd::Identity(3, 3);
  sol.psi = sol.phi;
  sol.zero_mode.assign(3, false);
  EXPECT_TRUE(tfim::green_matrix(sol).g.isApprox(-Eigen::MatrixXd::Identity(3, 3)));
  EXPECT_DOUBLE_EQ(tfim::magnetization_total(sol), 1.0);
}

TEST(Observables, GreenMatrixIsGaugeInvariant) {
  auto sol = tfim::solve_numeric(tfim::make_chain(tfim::ModelKind::Junction, 7, 1.0, 3.0, 1.2));
  const Eigen::MatrixXd before = tfim::green_matrix(sol).g;
  for (int q : {0, 3, 6}) {
    sol.phi.row(q) *= -1.0;
    sol.psi.row(q) *= -1.0;
  }
  EXPECT_LT((tfim::green_matrix(sol).g - before).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Observables, InvalidPairsAreRejected) {
  const auto g = tfim::green_matrix(tfim::solve_numeric(Eigen::VectorXd::Ones(3)));
  for (auto [i, j] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{0, 2}, std::pair{1, 5}}) {
    try {
      tfim::corr_xx(g, i, j);
      ADD_FAILURE() << i << "," << j;
    } catch (const tfim::Error& e) {
      EXPECT_EQ(e.code(), tfim::ErrorCode::InvalidSitePair);
    }
  }
  EXPECT_NEAR(tfim::corr_zz(g, 3, 1), tfim::corr_zz(g, 1, 3), 1e-15);
}

TEST(Observables, LongRangeCorrelationsMatchSpinOracle) {
  const Eigen::VectorXd c = (Eigen::VectorXd(6) << 0.4, 1.3, 0.8, 2.1, 0.6, 1.0).finished();
  const auto sol = tfim::solve_numeric(c);
  const auto g = tfim::green_matrix(sol);
  const auto report = tfim::oracle_observables(tfim::build_hamiltonian(c, 7), {{1, 3}, {2, 6}, {1, 7}});
  for (const auto& p : report.pairs) {
    EXPECT_NEAR(tfim::corr_xx(g, p.i, p.j), p.xx, 1e-11);
    EXPECT_NEAR(tfim::corr_yy(g, p.i, p.j), p.yy, 1e-11);
    EXPECT_NEAR(tfim::corr_zz(g, p.i, p.j), p.zz, 1e-11);
  }
  for (int i = 1; i <= 7; ++i) EXPECT_NEAR(tfim::magnetization_site(sol, i), report.mz_site(i - 1), 1e-11);
}

}  // namespace
