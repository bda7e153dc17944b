#include "tfim/root_scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tfim {

double chebyshev_u(int n, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

struct GridPoint {
  QuasiMomentum k;
  double x;
  double f;
};

std::vector<GridPoint> build_grid(const std::function<double(double)>& f, const ScanOptions& o, int n) {
  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(3 * n));
  auto push = [&](Branch b, double p) {
    QuasiMomentum k{b, p};
    const double x = k.cos_value();
    grid.push_back({k, x, f(x)});
  };
  const double eps = o.epsilon;
  if (o.x_min < -1.0) {
    const double v_max = std::acosh(-o.x_min);
    for (int i = 0; i < n; ++i) push(Branch::PiImag, v_max + (eps - v_max) * i / (n - 1));
  }
  const double pi = std::numbers::pi;
  for (int i = 0; i < n; ++i) push(Branch::Real, (pi - eps) + (2.0 * eps - pi) * i / (n - 1));
  if (o.x_max > 1.0) {
    const double u_max = std::acosh(o.x_max);
    for (int i = 0; i < n; ++i) push(Branch::Imag, eps + (u_max - eps) * i / (n - 1));
  }
  return grid;
}

QuasiMomentum bisect(const std::function<double(double)>& f, GridPoint a, GridPoint b) {
  const bool same_branch = a.k.branch == b.k.branch;
  for (int iter = 0; iter < 400; ++iter) {
    QuasiMomentum mid;
    if (same_branch) {
      mid = {a.k.branch, 0.5 * (a.k.param + b.k.param)};
      if (mid.param == a.k.param || mid.param == b.k.param) break;
    } else {
      const double xm = 0.5 * (a.x + b.x);
      if (xm == a.x || xm == b.x) break;
      mid = QuasiMomentum::from_cos(xm);
    }
    const double xm = mid.cos_value();
    const double fm = f(xm);
    if (fm == 0.0) return mid;
    GridPoint m{mid, xm, fm};
    if (std::signbit(fm) == std::signbit(a.f)) {
      a = m;
    } else {
      b = m;
    }
  }
  return std::abs(a.f) <= std::abs(b.f) ? a.k : b.k;
}

}  // namespace

ScanOutcome scan_roots(const std::function<double(double)>& f, int expected, const ScanOptions& options) {
  ScanOutcome out;
  int n = std::max(options.min_points_per_branch, 8);
  for (int attempt = 0; attempt <= options.max_doublings; ++attempt, n *= 2) {
    const auto grid = build_grid(f, options, n);
    std::vector<QuasiMomentum> roots;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& p = grid[i];
      if (!std::isfinite(p.f)) continue;
      if (p.f == 0.0) {
        roots.push_back(p.k);
        continue;
      }
      if (i + 1 < grid.size()) {
        const auto& q = grid[i + 1];
        if (std::isfinite(q.f) && q.f != 0.0 && std::signbit(p.f) != std::signbit(q.f)) {
          roots.push_back(bisect(f, p, q));
        }
      }
    }
    out.roots = std::move(roots);
    out.points_per_branch = n;
    if (static_cast<int>(out.roots.size()) >= expected) break;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const QuasiMomentum& a, const QuasiMomentum& b) { return a.cos_value() < b.cos_value(); });
  return out;
}

ScanOptions scan_window(double j, double j_max, int n_sites) {
  ScanOptions o;
  const double top = (1.0 + j_max) * (1.0 + j_max);
  const double x_hi = (j * j + 1.0) / (2.0 * j);
  const double x_lo = (j * j + 1.0 - top) / (2.0 * j);
  const double depth = 5.0 + std::log(j_max + 2.0);
  const double pad = 1.0 + 1e-9;
  o.x_max = std::max(x_hi * pad, std::cosh(depth));
  o.x_min = std::min(x_lo * pad, -std::cosh(depth));
  o.min_points_per_branch = 40 * n_sites;
  return o;
}

}  // namespace tfim
