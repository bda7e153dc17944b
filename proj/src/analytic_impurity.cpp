#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "analytic_common.hpp"
#include "tfim/analytic.hpp"
#include "tfim/errors.hpp"
#include "tfim/root_scan.hpp"

namespace tfim {

using cd = std::complex<double>;

ImpurityParams ImpurityParams::from_spec(const ChainSpec& spec) {
  if (spec.kind != ModelKind::Impurity) {
    throw Error(ErrorCode::InvalidParameter, "chain is not an impurity chain");
  }
  ImpurityParams p{spec.n_sites, spec.j1 / spec.h, spec.j2 / spec.h};
  p.validate();
  return p;
}

void ImpurityParams::validate() const {
  if (n_sites < 4 || n_sites % 2 != 0) {
    throw Error(ErrorCode::InvalidModelSize, "impurity chain needs an even N >= 4, got " + std::to_string(n_sites));
  }
  if (!(j1 > 0.0) || !(j2 > 0.0) || !std::isfinite(j1) || !std::isfinite(j2)) {
    throw Error(ErrorCode::InvalidParameter, "couplings must be positive and finite");
  }
}

Residual evaluate_impurity(const QuasiMomentum& k, const ImpurityParams& p) {
  const cd kc = k.value();
  const double m = p.n_sites / 2;
  const cd s_m = std::sin(kc * m);
  const cd s_m1 = std::sin(kc * (m - 1.0));
  const cd s_p1 = std::sin(kc * (m + 1.0));
  const cd den = p.j1 * s_m - s_p1;
  const double den_scale = std::max({1.0, std::abs(p.j1 * s_m), std::abs(s_p1)});
  if (std::abs(den) < 1e-13 * den_scale) {
    throw Error(ErrorCode::PoleAtK, "impurity condition has a pole at " + std::string(to_string(k.branch)) +
                                        " momentum " + std::to_string(k.param));
  }
  const double ratio = p.j2 / p.j1;
  const double c = (p.j2 * p.j2 - p.j1 * p.j1) / p.j1;
  const cd lhs = ratio * ratio * s_m * (p.j1 * s_m1 - s_m) / den;
  const cd rhs = s_p1 + c * s_m;
  // Each side is a single sine up to real factors, so it carries one power of i
  // off the real branch.
  const cd phase = k.branch == Branch::Real ? cd(1.0, 0.0) : cd(0.0, 1.0);
  const cd diff = (lhs - rhs) / phase;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  detail::check_real(diff, scale, "impurity residual");
  return {diff.real(), scale};
}

double residual_impurity(const QuasiMomentum& k, const ImpurityParams& p) { return evaluate_impurity(k, p).value; }

double impurity_scan_function(double x, const ImpurityParams& p) {
  const int m = p.n_sites / 2;
  const double u_m = chebyshev_u(m, x);
  const double u_m1 = chebyshev_u(m - 1, x);
  const double u_m2 = chebyshev_u(m - 2, x);
  const double r = p.j2 / p.j1;
  const double c = (p.j2 * p.j2 - p.j1 * p.j1) / p.j1;
  const double q = p.j1 * u_m1 - u_m;
  return r * r * u_m1 * (p.j1 * u_m2 - u_m1) - q * (u_m + c * u_m1);
}

std::vector<QuasiMomentum> find_modes_impurity(const ImpurityParams& p) {
  p.validate();
  const int n = p.n_sites;
  const auto options = scan_window(p.j1, std::max(p.j1, p.j2), n);
  auto outcome = scan_roots([&p](double x) { return impurity_scan_function(x, p); }, n, options);
  auto& roots = outcome.roots;
  if (static_cast<int>(roots.size()) != n) {
    throw Error(ErrorCode::IncompleteSpectrum,
                detail::spectrum_diagnostic(roots, n, detail::impurity_couplings(p), p.j1));
  }
  for (const auto& k : roots) dispersion(k, p.j1);
  // Ascending Lambda is descending cos k.
  std::reverse(roots.begin(), roots.end());
  return roots;
}

Eigen::VectorXcd impurity_amplitudes(const QuasiMomentum& k, const ImpurityParams& p, double lambda_sq,
                                     bool* singular) {
  const int n = p.n_sites;
  const int m = n / 2;
  if (singular) *singular = std::abs(std::cos(k.value() * (n + 0.5))) < 1e-13;
  const detail::Sinusoid s(k);
  const cd edge = s.boundary(p.j1, m + 1, lambda_sq);
  // Computed without cancellation, so only an exact zero is a pole.
  if (!(std::abs(edge) > 0.0) || !std::isfinite(std::abs(edge))) {
    throw Error(ErrorCode::AnsatzSingular, "left-segment amplitude of the impurity ansatz diverges");
  }
  const cd left = -(p.j2 / p.j1) * s.sin_n(m) / edge;
  Eigen::VectorXcd row(n);
  for (int i = 1; i <= m; ++i) row(i - 1) = left * s.boundary(p.j1, i, lambda_sq);
  for (int i = m + 1; i <= n; ++i) row(i - 1) = s.sin_n(i - n - 1);
  return row;
}

ImpuritySolution build_solution_impurity(const ImpurityParams& p, const std::vector<QuasiMomentum>& modes,
                                         double h) {
  p.validate();
  const int n = p.n_sites;
  if (static_cast<int>(modes.size()) != n) {
    throw Error(ErrorCode::IncompleteSpectrum, "expected " + std::to_string(n) + " modes, got " +
                                                   std::to_string(modes.size()));
  }
  ImpuritySolution out;
  const Eigen::VectorXd couplings = detail::impurity_couplings(p);
  out.solution = detail::empty_solution(couplings, h);
  const double floor = dispersion_floor(couplings);
  for (int q = 0; q < n; ++q) {
    const auto& k = modes[q];
    const auto row = detail::closed_form_row(
        [&](double l2, bool* singular) {
          const auto tuned = l2 < floor ? detail::retune_momentum(k, p.j1, l2) : k;
          return impurity_amplitudes(tuned, p, l2, singular);
        },
        dispersion(k, p.j1),
        couplings);
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

ImpuritySolution solve_impurity(const ChainSpec& spec) {
  const auto p = ImpurityParams::from_spec(spec);
  return build_solution_impurity(p, find_modes_impurity(p), spec.h);
}

}  // namespace tfim
