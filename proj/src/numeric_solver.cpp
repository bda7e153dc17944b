#include "tfim/numeric_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tfim/eigh.hpp"
#include "tfim/errors.hpp"

namespace tfim {

bool FermionSolution::has_zero_mode() const {
  return std::any_of(zero_mode.begin(), zero_mode.end(), [](bool z) { return z; });
}

double ground_energy(const FermionSolution& sol) { return -sol.lambdas.sum(); }

namespace {

double norm_bound(const Eigen::VectorXd& couplings) {
  return 1.0 + (couplings.size() > 0 ? couplings.cwiseAbs().maxCoeff() : 0.0);
}

// log of max_i prod_{l >= i} j_l, the empty product included.
double log_suffix_growth(const Eigen::VectorXd& couplings) {
  double best = 0.0;
  double acc = 0.0;
  for (Eigen::Index l = couplings.size() - 1; l >= 0; --l) {
    acc += std::log(couplings(l));
    best = std::max(best, acc);
  }
  return best;
}

}  // namespace

double zero_mode_threshold(const Eigen::VectorXd& couplings) { return 1e-8 * norm_bound(couplings); }

Eigen::VectorXd compute_psi(const Eigen::VectorXd& phi_row, double lambda,
                            const Eigen::VectorXd& couplings) {
  const Eigen::Index n = phi_row.size();
  if (couplings.size() != n - 1) {
    throw Error(ErrorCode::InvalidParameter, "phi row and coupling vector sizes disagree");
  }
  if (!(lambda > zero_mode_threshold(couplings))) {
    throw Error(ErrorCode::ZeroMode, "lambda = " + std::to_string(lambda) + " is below threshold");
  }
  Eigen::VectorXd psi(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double next = i + 1 < n ? couplings(i) * phi_row(i + 1) : 0.0;
    psi(i) = (phi_row(i) - next) / lambda;
  }
  return psi;
}

AdjointPsi compute_psi_adjoint(const Eigen::VectorXd& phi_row, const Eigen::VectorXd& couplings) {
  const Eigen::Index n = phi_row.size();
  if (couplings.size() != n - 1) {
    throw Error(ErrorCode::InvalidParameter, "phi row and coupling vector sizes disagree");
  }
  Eigen::VectorXd w(n);
  w(0) = phi_row(0);
  for (Eigen::Index i = 1; i < n; ++i) w(i) = couplings(i - 1) * w(i - 1) + phi_row(i);
  const double norm = w.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::ZeroMode, "adjoint recursion degenerated");
  }
  return {w / norm, 1.0 / norm};
}

double dispersion_floor(const Eigen::VectorXd& couplings) {
  const double b = norm_bound(couplings);
  return 4e3 * std::numeric_limits<double>::epsilon() * b * b;
}

PsiFromPhi psi_from_phi(const Eigen::VectorXd& phi_row, double lambda_sq,
                        const Eigen::VectorXd& couplings) {
  const double log_limit = std::log(norm_bound(couplings)) - log_suffix_growth(couplings);
  auto prefers_adjoint = [&](double l2) { return l2 <= 0.0 || std::log(l2) < log_limit; };

  if (lambda_sq >= dispersion_floor(couplings)) {
    if (prefers_adjoint(lambda_sq)) {
      auto a = compute_psi_adjoint(phi_row, couplings);
      return {std::move(a.psi), a.lambda, true};
    }
    const double lambda = std::sqrt(lambda_sq);
    return {compute_psi(phi_row, lambda, couplings), lambda, false};
  }
  // lambda_sq carries no digits here; ||D phi|| does, down to ~eps ||D||.
  const Eigen::VectorXd d_phi = -(difference_operator(couplings) * phi_row);
  const double rayleigh = d_phi.norm();
  if (rayleigh * rayleigh < dispersion_floor(couplings)) {
    // Unresolved even by ||D phi||; the adjoint estimate carries relative error
    // ~ eps * growth * lambda and wins whenever that is small.
    auto a = compute_psi_adjoint(phi_row, couplings);
    const double log_err = std::log(a.lambda) + log_suffix_growth(couplings) +
                           std::log(std::numeric_limits<double>::epsilon());
    if (log_err < std::log(1e-6)) return {std::move(a.psi), a.lambda, true};
  }
  if (prefers_adjoint(rayleigh * rayleigh)) {
    auto a = compute_psi_adjoint(phi_row, couplings);
    return {std::move(a.psi), a.lambda, true};
  }
  return {d_phi / rayleigh, rayleigh, false};
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  if (v.size() == 0) return;
  const double cutoff = 1e-8 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > cutoff) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

FermionSolution solve_numeric(const ChainSpec& spec) { return solve_numeric(spec.couplings, spec.h); }

FermionSolution solve_numeric(const Eigen::VectorXd& couplings, double h) {
  const Eigen::Index n = couplings.size() + 1;
  const Eigen::MatrixXd d = difference_operator(couplings);

  Eigen::MatrixXd chiral = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  chiral.topRightCorner(n, n) = d.transpose();
  chiral.bottomLeftCorner(n, n) = d;
  const auto eig = eigh_symmetric(chiral);

  FermionSolution sol;
  sol.lambdas.resize(n);
  sol.phi.resize(n, n);
  sol.psi.resize(n, n);
  sol.couplings = couplings;
  sol.h = h;
  sol.zero_mode.assign(static_cast<std::size_t>(n), false);

  const double near_zero = 1e-6 * norm_bound(couplings);
  for (Eigen::Index q = 0; q < n; ++q) {
    const Eigen::VectorXd plus = eig.vectors.col(n + q);
    const Eigen::VectorXd minus = eig.vectors.col(n - 1 - q);
    const double lambda = 0.5 * (eig.values(n + q) - eig.values(n - 1 - q));
    sol.lambdas(q) = std::max(lambda, 0.0);

    Eigen::VectorXd phi;
    Eigen::VectorXd psi;
    if (lambda > near_zero) {
      phi = plus.head(n).normalized();
      psi = (-plus.tail(n)).normalized();
      // (phi, -psi) is one eigenvector, so flip both together.
      const Eigen::VectorXd before = phi;
      fix_sign(phi);
      if (phi.dot(before) < 0.0) psi = -psi;
    } else {
      // The +-Lambda pair is nearly degenerate and the solver may return any
      // rotation of it; top halves still span phi, bottom halves span psi.
      const Eigen::VectorXd& top = plus.head(n).norm() >= minus.head(n).norm() ? plus : minus;
      const Eigen::VectorXd& bottom = plus.tail(n).norm() >= minus.tail(n).norm() ? plus : minus;
      phi = top.head(n).normalized();
      psi = bottom.tail(n).normalized();
      fix_sign(phi);
      // psi = Lambda w with w = -D^{-T} phi; w is computed without cancellation.
      Eigen::VectorXd w(n);
      w(0) = phi(0);
      for (Eigen::Index i = 1; i < n; ++i) w(i) = couplings(i - 1) * w(i - 1) + phi(i);
      const double overlap = psi.dot(w);
      if (overlap < 0.0) psi = -psi;
      if (overlap == 0.0 || !std::isfinite(overlap)) {
        psi.setZero();
        sol.zero_mode[static_cast<std::size_t>(q)] = true;
      }
    }
    sol.phi.row(q) = phi.transpose();
    sol.psi.row(q) = psi.transpose();
  }
  return sol;
}

std::vector<int> sort_modes(FermionSolution& sol) {
  const int n = sol.n_sites();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&sol](int a, int b) { return sol.lambdas(a) < sol.lambdas(b); });
  FermionSolution sorted = sol;
  for (int q = 0; q < n; ++q) {
    sorted.lambdas(q) = sol.lambdas(perm[q]);
    sorted.phi.row(q) = sol.phi.row(perm[q]);
    sorted.psi.row(q) = sol.psi.row(perm[q]);
    sorted.zero_mode[static_cast<std::size_t>(q)] = sol.zero_mode[static_cast<std::size_t>(perm[q])];
  }
  sol = std::move(sorted);
  return perm;
}

}  // namespace tfim
