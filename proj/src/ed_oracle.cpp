#include "tfim/ed_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include <Eigen/Eigenvalues>

#include "tfim/errors.hpp"
#include "tfim/observables.hpp"

namespace tfim {

namespace {

double z_of(std::uint32_t state, int site) { return (state >> (site - 1)) & 1u ? -1.0 : 1.0; }

int parity_of(std::uint32_t state) { return std::popcount(state) % 2 == 0 ? 1 : -1; }

}  // namespace

SpinHamiltonian build_hamiltonian(const ChainSpec& spec) { return build_hamiltonian(spec.couplings, spec.n_sites); }

SpinHamiltonian build_hamiltonian(const Eigen::VectorXd& couplings, int n_sites) {
  if (n_sites < 1) throw Error(ErrorCode::InvalidModelSize, "chain needs at least one site");
  if (n_sites > kMaxOracleSites) {
    throw Error(ErrorCode::TooLarge, std::to_string(n_sites) + " sites exceed the oracle limit of " +
                                         std::to_string(kMaxOracleSites));
  }
  if (couplings.size() != n_sites - 1) throw Error(ErrorCode::InvalidParameter, "need N - 1 couplings");
  const std::uint32_t dim = 1u << n_sites;
  SpinHamiltonian h{n_sites, Eigen::MatrixXd::Zero(dim, dim)};
  for (std::uint32_t s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 1; i <= n_sites; ++i) diag -= z_of(s, i);
    h.matrix(s, s) = diag;
    for (int i = 1; i < n_sites; ++i) {
      const std::uint32_t flipped = s ^ (3u << (i - 1));
      h.matrix(flipped, s) -= couplings(i - 1);
    }
  }
  return h;
}

std::vector<SpinEigenpair> ground_spectrum(const SpinHamiltonian& h, int m) {
  const Eigen::Index dim = h.matrix.rows();
  if (m < 0 || m > dim) throw Error(ErrorCode::InvalidParameter, "requested more eigenpairs than states");
  std::vector<SpinEigenpair> all;
  for (int parity : {1, -1}) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index s = 0; s < dim; ++s) {
      if (parity_of(static_cast<std::uint32_t>(s)) == parity) idx.push_back(s);
    }
    if (idx.empty()) continue;
    const auto b = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd block(b, b);
    for (Eigen::Index r = 0; r < b; ++r) {
      for (Eigen::Index c = 0; c < b; ++c) block(r, c) = h.matrix(idx[r], idx[c]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block);
    if (eig.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "parity block eigensolve failed");
    for (Eigen::Index q = 0; q < std::min<Eigen::Index>(b, m); ++q) {
      SpinEigenpair p{eig.eigenvalues()(q), Eigen::VectorXd::Zero(dim), parity};
      for (Eigen::Index r = 0; r < b; ++r) p.state(idx[r]) = eig.eigenvectors()(r, q);
      all.push_back(std::move(p));
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const SpinEigenpair& a, const SpinEigenpair& b) { return a.energy < b.energy; });
  all.resize(static_cast<std::size_t>(m));
  return all;
}

OracleReport oracle_observables(const SpinHamiltonian& h, const std::vector<std::pair<int, int>>& pairs) {
  const int n = h.n_sites;
  const auto low = ground_spectrum(h, std::min<int>(2, static_cast<int>(h.matrix.rows())));
  OracleReport r;
  r.e0 = low[0].energy;
  r.e1 = low.size() > 1 ? low[1].energy : low[0].energy;
  r.gap = r.e1 - r.e0;
  const SpinEigenpair* ground = &low[0];
  if (low.size() > 1 && r.gap < 1e-10 && low[1].parity == 1) ground = &low[1];
  const Eigen::VectorXd& c = ground->state;
  const auto dim = static_cast<std::uint32_t>(c.size());

  r.mz_site = Eigen::VectorXd::Zero(n);
  for (std::uint32_t s = 0; s < dim; ++s) {
    const double w = c(s) * c(s);
    for (int i = 1; i <= n; ++i) r.mz_site(i - 1) += w * z_of(s, i);
  }
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) {
      throw Error(ErrorCode::InvalidSitePair, "site pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    PairCorrelation p{i, j};
    const std::uint32_t mask = (1u << (i - 1)) | (1u << (j - 1));
    for (std::uint32_t s = 0; s < dim; ++s) {
      const double zz = z_of(s, i) * z_of(s, j);
      const double cross = c(s) * c(s ^ mask);
      p.xx += cross;
      p.yy -= zz * cross;
      p.zz += zz * c(s) * c(s);
    }
    r.pairs.push_back(p);
  }
  return r;
}

double compare_to_solution(OracleReport& report, const FermionSolution& sol) {
  double worst = 0.0;
  std::string label;
  auto track = [&](double oracle, double fermion, const std::string& what) {
    const double d = std::abs(oracle - fermion);
    if (!(d <= worst)) {
      worst = d;
      label = what;
    }
  };
  track(report.e0, ground_energy(sol), "e0");
  track(report.gap, energy_gap(sol), "gap");
  for (int i = 1; i <= sol.n_sites() && i <= report.mz_site.size(); ++i) {
    track(report.mz_site(i - 1), magnetization_site(sol, i), "mz(" + std::to_string(i) + ")");
  }
  const auto g = green_matrix(sol);
  for (const auto& p : report.pairs) {
    const int a = std::min(p.i, p.j);
    const int b = std::max(p.i, p.j);
    const std::string tag = "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
    track(p.xx, corr_xx(g, a, b), "xx" + tag);
    track(p.yy, corr_yy(g, a, b), "yy" + tag);
    track(p.zz, corr_zz(g, p.i, p.j), "zz" + tag);
  }
  report.max_abs_deviation = worst;
  report.worst_quantity = label;
  return worst;
}

}  // namespace tfim
