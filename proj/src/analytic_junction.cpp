#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "analytic_common.hpp"
#include "tfim/analytic.hpp"
#include "tfim/errors.hpp"
#include "tfim/root_scan.hpp"

namespace tfim {

using cd = std::complex<double>;

JunctionParams JunctionParams::from_spec(const ChainSpec& spec) {
  if (spec.kind != ModelKind::Junction) {
    throw Error(ErrorCode::InvalidParameter, "chain is not a junction chain");
  }
  JunctionParams p{spec.n_sites, spec.j1 / spec.h, spec.j2 / spec.h};
  p.validate();
  return p;
}

void JunctionParams::validate() const {
  if (n_sites < 5 || n_sites % 2 == 0) {
    throw Error(ErrorCode::InvalidModelSize, "junction chain needs an odd N >= 5, got " + std::to_string(n_sites));
  }
  if (!(j1 > 0.0) || !(j2 > 0.0) || !std::isfinite(j1) || !std::isfinite(j2)) {
    throw Error(ErrorCode::InvalidParameter, "couplings must be positive and finite");
  }
}

QuasiMomentum pair_k2(const QuasiMomentum& k1, const JunctionParams& p) {
  const double x2 = (p.j2 * p.j2 - p.j1 * p.j1 + 2.0 * p.j1 * k1.cos_value()) / (2.0 * p.j2);
  return QuasiMomentum::from_cos(x2);
}

Residual evaluate_junction(const ModePair& m, const JunctionParams& p) {
  const double n = p.n_sites;
  const cd k1 = m.k1.value();
  const cd k2 = m.k2.value();
  const cd lhs = (p.j2 / p.j1) * std::sin(k2 * ((n - 1) / 2)) *
                 (std::sin(k1 * ((n + 1) / 2)) - p.j1 * std::sin(k1 * ((n - 1) / 2)));
  const cd rhs = std::sin(k2 * ((n + 1) / 2)) *
                 (std::sin(k1 * ((n + 3) / 2)) - p.j1 * std::sin(k1 * ((n + 1) / 2)));
  // Every term is one k1 sine times one k2 sine.
  cd phase(1.0, 0.0);
  if (m.k1.branch != Branch::Real) phase *= cd(0.0, 1.0);
  if (m.k2.branch != Branch::Real) phase *= cd(0.0, 1.0);
  const cd diff = (lhs - rhs) / phase;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  detail::check_real(diff, scale, "junction residual");
  return {diff.real(), scale};
}

double residual_junction(const ModePair& m, const JunctionParams& p) { return evaluate_junction(m, p).value; }

double junction_scan_function(double x1, const JunctionParams& p) {
  const int half = (p.n_sites - 1) / 2;
  const double x2 = (p.j2 * p.j2 - p.j1 * p.j1 + 2.0 * p.j1 * x1) / (2.0 * p.j2);
  const double a0 = chebyshev_u(half - 1, x1);
  const double a1 = chebyshev_u(half, x1);
  const double a2 = chebyshev_u(half + 1, x1);
  const double lhs = (p.j2 / p.j1) * chebyshev_u(half - 1, x2) * (a1 - p.j1 * a0);
  const double rhs = chebyshev_u(half, x2) * (a2 - p.j1 * a1);
  return lhs - rhs;
}

std::vector<ModePair> find_modes_junction(const JunctionParams& p) {
  p.validate();
  const int n = p.n_sites;
  const auto options = scan_window(p.j1, std::max(p.j1, p.j2), n);
  auto outcome = scan_roots([&p](double x) { return junction_scan_function(x, p); }, n, options);
  auto& roots = outcome.roots;
  if (static_cast<int>(roots.size()) != n) {
    throw Error(ErrorCode::IncompleteSpectrum,
                detail::spectrum_diagnostic(roots, n, detail::junction_couplings(p), p.j1));
  }
  std::vector<ModePair> pairs;
  pairs.reserve(roots.size());
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    dispersion(*it, p.j1);
    pairs.push_back({*it, pair_k2(*it, p)});
  }
  return pairs;
}

Eigen::VectorXcd junction_amplitudes(const ModePair& m, const JunctionParams& p, double lambda_sq,
                                     bool* singular) {
  const int n = p.n_sites;
  const int half = (n - 1) / 2;
  if (singular) *singular = std::abs(std::sin(m.k2.value() * (n + 0.5))) < 1e-13;
  const detail::Sinusoid s1(m.k1);
  const detail::Sinusoid s2(m.k2);
  const cd edge = s1.boundary(p.j1, half + 1, lambda_sq);
  // Computed without cancellation, so only an exact zero is a pole.
  if (!(std::abs(edge) > 0.0) || !std::isfinite(std::abs(edge))) {
    throw Error(ErrorCode::AnsatzSingular, "left-segment amplitude of the junction ansatz diverges");
  }
  const cd left = s2.sin_n(half + 1) / edge;
  Eigen::VectorXcd row(n);
  for (int i = 1; i <= half; ++i) row(i - 1) = left * s1.boundary(p.j1, i, lambda_sq);
  for (int i = half + 1; i <= n; ++i) row(i - 1) = s2.sin_n(n + 1 - i);
  return row;
}

JunctionSolution build_solution_junction(const JunctionParams& p, const std::vector<ModePair>& modes, double h) {
  p.validate();
  const int n = p.n_sites;
  if (static_cast<int>(modes.size()) != n) {
    throw Error(ErrorCode::IncompleteSpectrum, "expected " + std::to_string(n) + " modes, got " +
                                                   std::to_string(modes.size()));
  }
  JunctionSolution out;
  const Eigen::VectorXd couplings = detail::junction_couplings(p);
  out.solution = detail::empty_solution(couplings, h);
  const double floor = dispersion_floor(couplings);
  for (int q = 0; q < n; ++q) {
    const auto& mode = modes[q];
    const auto row = detail::closed_form_row(
        [&](double l2, bool* singular) {
          if (!(l2 < floor)) return junction_amplitudes(mode, p, l2, singular);
          const ModePair tuned{detail::retune_momentum(mode.k1, p.j1, l2), detail::retune_momentum(mode.k2, p.j2, l2)};
          return junction_amplitudes(tuned, p, l2, singular);
        },
        dispersion(mode.k1, p.j1), couplings);
    if (row.singular) ++out.singular_ansatz;
    if (row.psi.adjoint) ++out.adjoint_rows;
    out.solution.lambdas(q) = row.psi.lambda;
    out.solution.phi.row(q) = row.phi.transpose();
    out.solution.psi.row(q) = row.psi.psi.transpose();
  }
  const auto perm = sort_modes(out.solution);
  out.modes.reserve(modes.size());
  for (int idx : perm) out.modes.push_back(modes[static_cast<std::size_t>(idx)]);
  return out;
}

JunctionSolution solve_junction(const ChainSpec& spec) {
  const auto p = JunctionParams::from_spec(spec);
  return build_solution_junction(p, find_modes_junction(p), spec.h);
}

}  // namespace tfim
