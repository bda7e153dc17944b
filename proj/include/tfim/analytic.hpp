#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tfim/core_model.hpp"
#include "tfim/numeric_solver.hpp"
#include "tfim/quasi_momentum.hpp"

namespace tfim {

/// Uniform chain with one modified bond in the middle (bond N/2 carries j2).
struct ImpurityParams {
  int n_sites = 0;
  double j1 = 1.0;
  double j2 = 1.0;

  static ImpurityParams from_spec(const ChainSpec& spec);
  void validate() const;
};

/// Two uniform halves joined at the middle site: bonds 1..(N-1)/2 carry j1,
/// the rest j2.
struct JunctionParams {
  int n_sites = 0;
  double j1 = 1.0;
  double j2 = 1.0;

  static JunctionParams from_spec(const ChainSpec& spec);
  void validate() const;
};

/// Residual of a quantisation condition. `value` is real by construction:
/// on complex branches the raw complex difference is divided by i^c, c being
/// the number of complex momenta involved. `scale` is the largest term.
struct Residual {
  double value = 0.0;
  double scale = 0.0;
};

/// Quantisation condition of the impurity chain,
/// (j2/j1)^2 sin(kN/2) [j1 sin(k(N/2 - 1)) - sin(kN/2)]
///   = [j1 sin(kN/2) - sin(k(N/2 + 1))][sin(k(N/2 + 1)) + c sin(kN/2)],
/// c = (j2^2 - j1^2) / j1. Throws PoleAtK where the closed form for the
/// left-segment amplitude has a vanishing denominator, BranchError when the
/// normalised residual is not real.
Residual evaluate_impurity(const QuasiMomentum& k, const ImpurityParams& p);
double residual_impurity(const QuasiMomentum& k, const ImpurityParams& p);

/// Cleared polynomial form of the impurity condition in x = cos k. Same roots,
/// no poles; used for the sign-change scan.
double impurity_scan_function(double x, const ImpurityParams& p);

/// All N quasi-momenta, ordered by ascending Lambda. Throws IncompleteSpectrum
/// with per-branch counts and the reference spectrum when fewer are found.
std::vector<QuasiMomentum> find_modes_impurity(const ImpurityParams& p);

/// The pair (k1, k2) of one junction mode; k2 follows from equal energies on
/// both sides: cos k2 = (j2^2 - j1^2 + 2 j1 cos k1) / (2 j2).
struct ModePair {
  QuasiMomentum k1;
  QuasiMomentum k2;
};

QuasiMomentum pair_k2(const QuasiMomentum& k1, const JunctionParams& p);

/// Junction quantisation condition:
/// (j2/j1) sin(k2(N-1)/2) [sin(k1(N+1)/2) - j1 sin(k1(N-1)/2)]
///   = sin(k2(N+1)/2) [sin(k1(N+3)/2) - j1 sin(k1(N+1)/2)].
Residual evaluate_junction(const ModePair& m, const JunctionParams& p);
double residual_junction(const ModePair& m, const JunctionParams& p);
double junction_scan_function(double x1, const JunctionParams& p);

std::vector<ModePair> find_modes_junction(const JunctionParams& p);

/// Closed-form phi rows for one mode, before normalisation. Complex because
/// the momentum may be complex; for a physical root the row is real up to a
/// global phase. `lambda_sq` is the mode's Lambda^2; it resolves the
/// boundary combinations that cancel for modes bound to a chain end. The
/// common factor 1/cos(k(N+1/2)) (impurity) or 1/sin(k2(N+1/2)) (junction)
/// is left out since normalisation removes it; `singular` reports whether it
/// vanishes.
Eigen::VectorXcd impurity_amplitudes(const QuasiMomentum& k, const ImpurityParams& p, double lambda_sq,
                                     bool* singular = nullptr);
Eigen::VectorXcd junction_amplitudes(const ModePair& m, const JunctionParams& p, double lambda_sq,
                                     bool* singular = nullptr);

/// Removes the global phase of `row` (taken from its largest entry), checks the
/// remaining imaginary part is below 1e-9 relative and returns the unit,
/// sign-fixed real row. Throws BranchError otherwise.
Eigen::VectorXd real_unit_row(const Eigen::VectorXcd& row);

/// Result of the closed-form route. Rows of `solution` are sorted by Lambda
/// and `modes` follows the same order.
struct ImpuritySolution {
  FermionSolution solution;
  std::vector<QuasiMomentum> modes;
  int singular_ansatz = 0;
  int adjoint_rows = 0;
};

struct JunctionSolution {
  FermionSolution solution;
  std::vector<ModePair> modes;
  int singular_ansatz = 0;
  int adjoint_rows = 0;
};

ImpuritySolution build_solution_impurity(const ImpurityParams& p, const std::vector<QuasiMomentum>& modes,
                                         double h = 1.0);
JunctionSolution build_solution_junction(const JunctionParams& p, const std::vector<ModePair>& modes,
                                         double h = 1.0);

ImpuritySolution solve_impurity(const ChainSpec& spec);
JunctionSolution solve_junction(const ChainSpec& spec);

/// Closed-form solution for an impurity or junction chain.
FermionSolution solve_analytic(const ChainSpec& spec);

}  // namespace tfim
