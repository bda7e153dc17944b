#include "tfim/quasi_momentum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tfim/errors.hpp"

namespace tfim {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Real: return "real";
    case Branch::Imag: return "imag";
    case Branch::PiImag: return "pi_imag";
  }
  return "unknown";
}

std::complex<double> QuasiMomentum::value() const {
  switch (branch) {
    case Branch::Real: return {param, 0.0};
    case Branch::Imag: return {0.0, param};
    case Branch::PiImag: return {std::numbers::pi, -param};
  }
  return {};
}

double QuasiMomentum::cos_value() const {
  switch (branch) {
    case Branch::Real: return std::cos(param);
    case Branch::Imag: return std::cosh(param);
    case Branch::PiImag: return -std::cosh(param);
  }
  return 0.0;
}

QuasiMomentum QuasiMomentum::from_cos(double x) {
  if (x > 1.0) return {Branch::Imag, std::acosh(x)};
  if (x < -1.0) return {Branch::PiImag, std::acosh(-x)};
  return {Branch::Real, std::acos(x)};
}

double dispersion(const QuasiMomentum& k, double j, double tol) {
  const double scale = j * j + 1.0;
  const double value = scale - 2.0 * j * k.cos_value();
  if (value >= 0.0) return value;
  if (value >= -tol * scale) return 0.0;
  throw Error(ErrorCode::InvalidRoot, "negative dispersion " + std::to_string(value) + " for " +
                                          std::string(to_string(k.branch)) + " momentum " +
                                          std::to_string(k.param));
}

}  // namespace tfim
