#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tfim/core_model.hpp"
#include "tfim/numeric_solver.hpp"

namespace tfim {

/// Dense H = -sum_i j_i sx_i sx_{i+1} - sum_i sz_i in the sz product basis.
/// Site 1 is the least significant bit; a 0 bit is sz = +1.
struct SpinHamiltonian {
  int n_sites = 0;
  Eigen::MatrixXd matrix;
};

inline constexpr int kMaxOracleSites = 12;

SpinHamiltonian build_hamiltonian(const ChainSpec& spec);
/// `couplings` has n_sites - 1 entries; zeros are allowed here. Throws TooLarge above 12 sites.
SpinHamiltonian build_hamiltonian(const Eigen::VectorXd& couplings, int n_sites);

struct SpinEigenpair {
  double energy = 0.0;
  Eigen::VectorXd state;
  /// +1 for an even number of flipped spins, -1 otherwise.
  int parity = 1;
};

/// The m lowest eigenpairs, ascending. H is diagonalised one parity block at a time.
std::vector<SpinEigenpair> ground_spectrum(const SpinHamiltonian& h, int m);

struct PairCorrelation {
  int i = 0;
  int j = 0;
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
};

struct OracleReport {
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;
  Eigen::VectorXd mz_site;
  std::vector<PairCorrelation> pairs;
  /// Filled by compare_to_solution.
  double max_abs_deviation = 0.0;
  std::string worst_quantity;
};

/// Ground-state expectation values. A ground doublet closer than 1e-10 is
/// resolved by using the even-parity member.
OracleReport oracle_observables(const SpinHamiltonian& h, const std::vector<std::pair<int, int>>& pairs);

/// Largest |oracle - free fermion| over E0, gap, every <sz_i> and every pair
/// correlator in `report`; also stored into the report.
double compare_to_solution(OracleReport& report, const FermionSolution& sol);

}  // namespace tfim
