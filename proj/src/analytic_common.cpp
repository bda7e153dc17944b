#include "analytic_common.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tfim/errors.hpp"

namespace tfim {

namespace detail {

void check_real(std::complex<double> z, double scale, const char* what) {
  if (!(std::abs(z.imag()) <= 1e-9 * std::max(1.0, scale))) {
    std::ostringstream os;
    os << what << " has imaginary part " << z.imag() << " at scale " << scale;
    throw Error(ErrorCode::BranchError, os.str());
  }
}

Sinusoid::Sinusoid(const QuasiMomentum& k) : branch_(k.branch), param_(k.param) {
  switch (k.branch) {
    case Branch::Real:
      z_ = std::polar(1.0, k.param);
      half_sin_sq_ = std::pow(std::sin(0.5 * k.param), 2);
      sin_k_ = std::sin(k.param);
      break;
    case Branch::Imag:
      z_ = {std::exp(-k.param), 0.0};
      imag_u_ = k.param;
      break;
    // k = pi - iv is equivalent to -k = pi + iv up to an overall sign of every sine.
    case Branch::PiImag: z_ = {-std::exp(-k.param), 0.0}; break;
  }
}

std::complex<double> Sinusoid::power(int n) const {
  std::complex<double> base = n < 0 ? 1.0 / z_ : z_;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  std::complex<double> out(1.0, 0.0);
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

std::complex<double> Sinusoid::sin_n(int n) const {
  // Same value as (z^n - z^-n) / 2i, without the cancellation at small k.
  switch (branch_) {
    case Branch::Real: return std::sin(n * param_);
    case Branch::Imag: return {0.0, std::sinh(n * param_)};
    case Branch::PiImag: return {0.0, (n % 2 == 0 ? 1.0 : -1.0) * std::sinh(n * param_)};
  }
  return 0.0;
}

std::complex<double> Sinusoid::boundary(double j, int n, double lambda_sq) const {
  std::complex<double> near = j - z_;
  std::complex<double> far = j - 1.0 / z_;
  if (imag_u_ > 0.0) {
    // z = exp(-u): keep j - z and j - 1/z exact as u -> 0.
    near = (j - 1.0) - std::expm1(-imag_u_);
    far = (j - 1.0) - std::expm1(imag_u_);
  }
  if (z_.imag() != 0.0) {
    // On the unit circle the factors are conjugate; j - cos k is taken from
    // sin^2(k/2) so that it keeps its digits as k -> 0.
    near = {(j - 1.0) + 2.0 * half_sin_sq_, -sin_k_};
    far = std::conj(near);
  } else if (std::abs(far) <= std::abs(near)) {
    far = lambda_sq / near;
  } else {
    near = lambda_sq / far;
  }
  return (power(n - 1) * near - power(1 - n) * far) / std::complex<double>(0.0, 2.0);
}

QuasiMomentum retune_momentum(const QuasiMomentum& k, double j, double lambda_sq) {
  const bool near_edge = (k.branch == Branch::Real && k.param < 0.5 * std::numbers::pi) ||
                         (k.branch == Branch::Imag && k.param < 1.0);
  if (!near_edge || !(lambda_sq > 0.0)) return k;
  // s = sin^2(k/2), negative on the imaginary branch where it is -sinh^2(u/2).
  const double s = (lambda_sq - (1.0 - j) * (1.0 - j)) / (4.0 * j);
  if (s > 0.0) return {Branch::Real, 2.0 * std::asin(std::sqrt(std::min(s, 1.0)))};
  if (s < 0.0) return {Branch::Imag, 2.0 * std::asinh(std::sqrt(-s))};
  return k;
}

ClosedFormRow closed_form_row(const std::function<Eigen::VectorXcd(double, bool*)>& amplitudes, double lambda_sq,
                              const Eigen::VectorXd& couplings) {
  ClosedFormRow row;
  // An unresolved Lambda^2 is noise; zero is as good an estimate and keeps the
  // amplitudes free of the spurious growing component.
  if (lambda_sq < dispersion_floor(couplings)) lambda_sq = 0.0;
  for (int pass = 0; pass < 6; ++pass) {
    row.phi = real_unit_row(amplitudes(lambda_sq, &row.singular));
    row.psi = psi_from_phi(row.phi, lambda_sq, couplings);
    if (!row.psi.adjoint && lambda_sq >= dispersion_floor(couplings)) break;
    const double next = row.psi.lambda * row.psi.lambda;
    const bool settled = std::abs(next - lambda_sq) <= 1e-14 * next;
    if (!(next < dispersion_floor(couplings))) break;
    lambda_sq = next;
    if (settled) break;
  }
  return row;
}

Eigen::VectorXd impurity_couplings(const ImpurityParams& p) {
  return build_couplings(ModelKind::Impurity, p.n_sites, p.j1, p.j2, 1.0);
}

Eigen::VectorXd junction_couplings(const JunctionParams& p) {
  return build_couplings(ModelKind::Junction, p.n_sites, p.j1, p.j2, 1.0);
}

FermionSolution empty_solution(const Eigen::VectorXd& couplings, double h) {
  const Eigen::Index n = couplings.size() + 1;
  FermionSolution sol;
  sol.lambdas = Eigen::VectorXd::Zero(n);
  sol.phi = Eigen::MatrixXd::Zero(n, n);
  sol.psi = Eigen::MatrixXd::Zero(n, n);
  sol.couplings = couplings;
  sol.h = h;
  sol.zero_mode.assign(static_cast<std::size_t>(n), false);
  return sol;
}

std::string spectrum_diagnostic(const std::vector<QuasiMomentum>& found, int expected,
                                const Eigen::VectorXd& couplings, double j) {
  int counts[3] = {0, 0, 0};
  for (const auto& k : found) ++counts[static_cast<int>(k.branch)];
  std::ostringstream os;
  os << "found " << found.size() << " of " << expected << " modes (real " << counts[0] << ", imag "
     << counts[1] << ", pi_imag " << counts[2] << "); reference lambda:";
  const auto ref = solve_numeric(couplings);
  int expect[3] = {0, 0, 0};
  const double lo = (j - 1.0) * (j - 1.0);
  const double hi = (j + 1.0) * (j + 1.0);
  for (Eigen::Index q = 0; q < ref.lambdas.size(); ++q) {
    const double l = ref.lambdas(q);
    os << ' ' << l;
    const double l2 = l * l;
    ++expect[l2 > hi ? 2 : (l2 < lo ? 1 : 0)];
  }
  os << " (real " << expect[0] << ", imag " << expect[1] << ", pi_imag " << expect[2] << ")";
  return os.str();
}

}  // namespace detail

Eigen::VectorXd real_unit_row(const Eigen::VectorXcd& row) {
  Eigen::Index at = 0;
  const double peak = row.cwiseAbs().maxCoeff(&at);
  if (!(peak > 0.0) || !std::isfinite(peak)) {
    throw Error(ErrorCode::BranchError, "closed-form amplitudes are null or not finite");
  }
  const std::complex<double> phase = row(at) / peak;
  const Eigen::VectorXcd turned = row / phase;
  const double imag = turned.imag().cwiseAbs().maxCoeff();
  if (imag > 1e-9 * peak) {
    throw Error(ErrorCode::BranchError,
                "closed-form amplitudes are not real: relative imaginary part " + std::to_string(imag / peak));
  }
  Eigen::VectorXd out = turned.real() / turned.real().norm();
  fix_sign(out);
  return out;
}

FermionSolution solve_analytic(const ChainSpec& spec) {
  switch (spec.kind) {
    case ModelKind::Impurity: return solve_impurity(spec).solution;
    case ModelKind::Junction: return solve_junction(spec).solution;
    case ModelKind::Custom: break;
  }
  throw Error(ErrorCode::InvalidParameter, "no closed form for custom chains");
}

}  // namespace tfim
