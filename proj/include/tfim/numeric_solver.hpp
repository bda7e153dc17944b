#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tfim/core_model.hpp"

namespace tfim {

/// Quasiparticle description of the chain ground state.
///
/// Row q of `phi` and `psi` is mode q over the sites; modes are ordered by
/// ascending `lambdas`. Everything is dimensionless (energies in units of h).
struct FermionSolution {
  Eigen::VectorXd lambdas;
  Eigen::MatrixXd phi;
  Eigen::MatrixXd psi;
  Eigen::VectorXd couplings;
  double h = 1.0;
  /// zero_mode[q] is set when psi row q could not be fixed and was zeroed.
  std::vector<bool> zero_mode;

  int n_sites() const { return static_cast<int>(lambdas.size()); }
  bool has_zero_mode() const;
};

/// E0 = -sum_q Lambda_q (dimensionless).
double ground_energy(const FermionSolution& sol);

/// Lambda below which the direct psi rule is numerically meaningless for this
/// coupling profile: 1e-8 times the bound 1 + max_i j_i on ||D||.
double zero_mode_threshold(const Eigen::VectorXd& couplings);

/// Direct rule psi_i = (phi_i - j_i phi_{i+1}) / Lambda with phi_{N+1} = 0,
/// i.e. psi = -D phi / Lambda. Throws ZeroMode when lambda is at or below
/// zero_mode_threshold().
Eigen::VectorXd compute_psi(const Eigen::VectorXd& phi_row, double lambda,
                            const Eigen::VectorXd& couplings);

/// Adjoint rule from D^T psi = -Lambda phi. Writing psi = Lambda w gives the
/// forward recursion w_1 = phi_1, w_i = j_{i-1} w_{i-1} + phi_i, and for a unit
/// phi the normalisation fixes Lambda = 1 / ||w||. The recursion has no
/// subtractive cancellation for modes localised near Lambda = 0, where the
/// direct rule divides two tiny numbers.
struct AdjointPsi {
  Eigen::VectorXd psi;
  double lambda = 0.0;
};
AdjointPsi compute_psi_adjoint(const Eigen::VectorXd& phi_row, const Eigen::VectorXd& couplings);

/// Absolute uncertainty of a Lambda^2 obtained from a momentum through the
/// dispersion (rounding of cos k times ~j^2), with a safety factor.
double dispersion_floor(const Eigen::VectorXd& couplings);

/// Picks the better conditioned of the two rules for a unit `phi_row` whose
/// squared energy is `lambda_sq`. The direct rule loses ~||D|| / Lambda digits,
/// the adjoint rule ~P * Lambda where P is the largest suffix product of the
/// couplings (the growth of the forward recursion). Below dispersion_floor()
/// `lambda_sq` is ignored and Lambda is estimated from phi (||D phi||, or the
/// adjoint norm when that is the better conditioned rule).
struct PsiFromPhi {
  Eigen::VectorXd psi;
  double lambda = 0.0;
  bool adjoint = false;
};
PsiFromPhi psi_from_phi(const Eigen::VectorXd& phi_row, double lambda_sq,
                        const Eigen::VectorXd& couplings);

/// Flips v so its first non-negligible component (|v_i| > 1e-8 max|v|) is positive.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v);

/// Reference solution for any coupling profile.
///
/// Diagonalises the 2N x 2N chiral matrix [[0, D^T], [D, 0]] with the Jacobi
/// solver. Its eigenpairs are (+-Lambda_q, (phi_q, -+psi_q) / sqrt 2), so
/// Lambda, phi and psi come out of one symmetric eigenproblem with absolute
/// accuracy eps * ||D|| on Lambda, which keeps near-zero modes resolvable
/// (working with M = D^T D would square their conditioning).
FermionSolution solve_numeric(const ChainSpec& spec);
FermionSolution solve_numeric(const Eigen::VectorXd& couplings, double h = 1.0);

/// Reorders the modes of `sol` by ascending Lambda and returns the permutation
/// used (new row q came from old row perm[q]).
std::vector<int> sort_modes(FermionSolution& sol);

}  // namespace tfim
