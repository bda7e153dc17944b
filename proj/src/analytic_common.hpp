#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tfim/analytic.hpp"

namespace tfim::detail {

/// sin(n k) and the boundary combination j sin((n-1) k) - sin(n k), evaluated
/// through z = e^{ik} with |z| <= 1. The boundary combination factors as
/// [z^{n-1} (j - z) - z^{1-n} (j - 1/z)] / 2i and (j - z)(j - 1/z) = Lambda^2,
/// so the smaller factor is taken as Lambda^2 over the larger one. For edge
/// modes that factor is far below the rounding error of z itself.
class Sinusoid {
 public:
  explicit Sinusoid(const QuasiMomentum& k);

  std::complex<double> sin_n(int n) const;
  std::complex<double> boundary(double j, int n, double lambda_sq) const;

 private:
  std::complex<double> power(int n) const;

  Branch branch_;
  double param_;
  std::complex<double> z_;
  double half_sin_sq_ = 0.0;  // sin^2(k/2) on the real branch
  double sin_k_ = 0.0;
  double imag_u_ = 0.0;       // u on the imaginary branch
};

/// One phi/psi row from closed-form amplitudes that depend on Lambda^2. When
/// Lambda^2 is below what the momentum resolves, the Lambda recovered from phi
/// feeds back into the amplitudes until it settles (a few passes at most).
struct ClosedFormRow {
  Eigen::VectorXd phi;
  PsiFromPhi psi;
  bool singular = false;
};

/// A real momentum near k = 0 whose Lambda^2 lies below what cos k resolves is
/// recovered from Lambda^2 = (1 - j)^2 + 4 j sin^2(k/2). Other momenta are
/// returned unchanged.
QuasiMomentum retune_momentum(const QuasiMomentum& k, double j, double lambda_sq);

ClosedFormRow closed_form_row(const std::function<Eigen::VectorXcd(double, bool*)>& amplitudes, double lambda_sq,
                              const Eigen::VectorXd& couplings);

/// Throws BranchError unless |Im z| <= 1e-9 max(1, scale).
void check_real(std::complex<double> z, double scale, const char* what);

Eigen::VectorXd impurity_couplings(const ImpurityParams& p);
Eigen::VectorXd junction_couplings(const JunctionParams& p);

FermionSolution empty_solution(const Eigen::VectorXd& couplings, double h);

/// Message for IncompleteSpectrum: roots per branch plus the reference
/// spectrum, classified against the band of coupling `j`.
std::string spectrum_diagnostic(const std::vector<QuasiMomentum>& found, int expected,
                                const Eigen::VectorXd& couplings, double j);

}  // namespace tfim::detail
