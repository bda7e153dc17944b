#pragma once

#include <functional>
#include <vector>

#include "tfim/quasi_momentum.hpp"

namespace tfim {

/// Chebyshev polynomial of the second kind, U_n(x), with U_{-1} = 0.
/// sin((n + 1) k) = sin(k) U_n(cos k) holds on every branch.
double chebyshev_u(int n, double x);

struct ScanOptions {
  /// Interval of cos k that may hold physical roots. Values outside [-1, 1]
  /// are reached through the PiImag and Imag branches.
  double x_min = -1.0;
  double x_max = 1.0;
  int min_points_per_branch = 400;
  int max_doublings = 10;
  double epsilon = 1e-9;
};

struct ScanOutcome {
  std::vector<QuasiMomentum> roots;  // ascending cos k
  int points_per_branch = 0;
};

/// Sign-change scan of a real function of x = cos k over the PiImag, Real and
/// Imag branches in order of increasing x, followed by bisection to machine
/// precision. The grid is doubled until `expected` roots are bracketed or
/// max_doublings is exhausted; the caller decides what a shortfall means.
ScanOutcome scan_roots(const std::function<double(double)>& f, int expected, const ScanOptions& options);

/// Root-search window for Lambda^2 = j^2 + 1 - 2 j x over [0, (1 + j_max)^2],
/// widened to at least the Imag/PiImag depth 5 + ln(j_max + 2).
ScanOptions scan_window(double j, double j_max, int n_sites);

}  // namespace tfim
