#pragma once

#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace tfim {

enum class ModelKind { Impurity, Junction, Custom };

std::string_view to_string(ModelKind kind);
/// Accepts "impurity", "junction" or "custom"; throws InvalidParameter otherwise.
ModelKind parse_model_kind(std::string_view name);

/// An open transverse-field Ising chain
///
///   H = -sum_i J_i sx_i sx_{i+1} - h sum_i sz_i
///
/// stored in units of the field: `couplings[i] = J_{i+1} / h` for the bond
/// between sites i+1 and i+2 (sites are 1-based in the physics, the vector is
/// 0-based). For Custom chains `j1`/`j2` are unused.
struct ChainSpec {
  ModelKind kind = ModelKind::Custom;
  int n_sites = 0;
  double j1 = 0.0;
  double j2 = 0.0;
  double h = 1.0;
  Eigen::VectorXd couplings;
};

/// Dimensionless bond profile for the impurity (one modified bond between
/// sites N/2 and N/2+1, N even) and junction (bonds 1..(N-1)/2 carry J1, the
/// rest J2, N odd) chains.
Eigen::VectorXd build_couplings(ModelKind kind, int n, double j1, double j2, double h);

ChainSpec make_chain(ModelKind kind, int n, double j1, double j2, double h);
ChainSpec make_custom_chain(const Eigen::VectorXd& couplings, double h = 1.0);

/// Upper bidiagonal D with D_ii = -1 and D_{i,i+1} = j_i, so that
/// (D x)_i = j_i x_{i+1} - x_i with x_{N+1} = 0.
Eigen::MatrixXd difference_operator(const Eigen::VectorXd& couplings);

/// M = D^T D. Its eigenvalues are the squared quasiparticle energies.
Eigen::MatrixXd build_quadratic_form(const Eigen::VectorXd& couplings);

/// 1-based sites of the bond the observables focus on: the impurity bond
/// (N/2, N/2+1), the junction bond ((N-1)/2, (N+1)/2), or the central bond of a
/// custom chain.
std::pair<int, int> center_pair(const ChainSpec& spec);

}  // namespace tfim
