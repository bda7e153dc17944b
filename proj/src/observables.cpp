#include "tfim/observables.hpp"

#include <string>

#include "tfim/errors.hpp"

namespace tfim {

GreenMatrix green_matrix(const FermionSolution& sol) {
  return {-sol.psi.transpose() * sol.phi, sol.has_zero_mode()};
}

namespace {

void check_pair(const GreenMatrix& g, int i, int j, bool ordered) {
  const int n = static_cast<int>(g.g.rows());
  const bool bad = i < 1 || j < 1 || i > n || j > n || i == j || (ordered && i > j);
  if (bad) {
    throw Error(ErrorCode::InvalidSitePair,
                "site pair (" + std::to_string(i) + ", " + std::to_string(j) + ") on " + std::to_string(n) + " sites");
  }
}

double block_determinant(const Eigen::MatrixXd& block) { return block.partialPivLu().determinant(); }

}  // namespace

double corr_xx(const GreenMatrix& g, int i, int j) {
  check_pair(g, i, j, true);
  return block_determinant(g.g.block(i - 1, i, j - i, j - i));
}

double corr_yy(const GreenMatrix& g, int i, int j) {
  check_pair(g, i, j, true);
  return block_determinant(g.g.block(i, i - 1, j - i, j - i));
}

double corr_zz(const GreenMatrix& g, int i, int j) {
  check_pair(g, i, j, false);
  const auto& m = g.g;
  return m(i - 1, i - 1) * m(j - 1, j - 1) - m(j - 1, i - 1) * m(i - 1, j - 1);
}

double magnetization_site(const FermionSolution& sol, int i) {
  if (i < 1 || i > sol.n_sites()) throw Error(ErrorCode::InvalidSitePair, "site " + std::to_string(i));
  const Eigen::VectorXd diff = (sol.psi.col(i - 1) - sol.phi.col(i - 1)) / 2.0;
  return 1.0 - 2.0 * diff.squaredNorm();
}

double magnetization_total(const FermionSolution& sol) {
  double sum = 0.0;
  for (int i = 1; i <= sol.n_sites(); ++i) sum += magnetization_site(sol, i);
  return sum / sol.n_sites();
}

double energy_gap(const FermionSolution& sol) { return 2.0 * sol.lambdas.minCoeff(); }

}  // namespace tfim
