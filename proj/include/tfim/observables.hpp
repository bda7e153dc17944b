#pragma once

#include <Eigen/Dense>

#include "tfim/numeric_solver.hpp"

namespace tfim {

/// G = -psi^T phi. Invariant under flipping the sign of any (phi_q, psi_q) pair.
struct GreenMatrix {
  Eigen::MatrixXd g;
  bool zero_mode_flag = false;
};

GreenMatrix green_matrix(const FermionSolution& sol);

/// <sx_i sx_j> for 1-based sites i < j: determinant of G rows i..j-1, columns i+1..j.
double corr_xx(const GreenMatrix& g, int i, int j);
/// <sy_i sy_j> for i < j: determinant of G rows i+1..j, columns i..j-1.
double corr_yy(const GreenMatrix& g, int i, int j);
/// <sz_i sz_j> for i != j: G_ii G_jj - G_ji G_ij.
double corr_zz(const GreenMatrix& g, int i, int j);

/// <sz_i> = 1 - 2 sum_q ((psi_qi - phi_qi) / 2)^2, 1-based site.
double magnetization_site(const FermionSolution& sol, int i);
/// Mean of magnetization_site over the chain.
double magnetization_total(const FermionSolution& sol);

/// 2 min_q Lambda_q, dimensionless.
double energy_gap(const FermionSolution& sol);

}  // namespace tfim
