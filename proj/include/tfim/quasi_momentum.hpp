#pragma once

#include <complex>
#include <string_view>

namespace tfim {

/// Where a quasi-momentum lives. Real: k in (0, pi). Imag: k = i u. PiImag: k = pi - i v.
enum class Branch { Real, Imag, PiImag };

std::string_view to_string(Branch b);

/// A quasi-momentum parameterised by its branch and a real parameter
/// (k, u or v, all positive).
struct QuasiMomentum {
  Branch branch = Branch::Real;
  double param = 0.0;

  std::complex<double> value() const;
  /// cos k: cos(k), cosh(u) or -cosh(v).
  double cos_value() const;

  /// Inverse of cos_value(): |x| <= 1 is Real, x > 1 Imag, x < -1 PiImag.
  static QuasiMomentum from_cos(double x);
};

/// Lambda^2 = j^2 + 1 - 2 j cos k. Slightly negative values within `tol` are
/// clamped to zero; anything lower throws InvalidRoot.
double dispersion(const QuasiMomentum& k, double j, double tol = 1e-12);

}  // namespace tfim
