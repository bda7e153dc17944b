#include "tfim/app.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "tfim/analytic.hpp"
#include "tfim/errors.hpp"
#include "tfim/observables.hpp"

namespace tfim::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs body(0..count-1) on a small pool. body must not throw.
template <typename F>
void parallel_for(int count, int threads, F&& body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

ScanRecord blank_record(const ChainSpec& spec, Method method) {
  ScanRecord r;
  r.model = std::string(tfim::to_string(spec.kind));
  r.n = spec.n_sites;
  r.j1 = spec.j1;
  r.j2 = spec.j2;
  r.h = spec.h;
  r.method = std::string(to_string(method));
  r.gap = r.mz_total = r.cxx = r.cyy = r.czz = kNaN;
  return r;
}

std::string describe(const ChainSpec& spec) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "j2=%g h=%g", spec.j2, spec.h);
  return buf;
}

}  // namespace

std::string_view to_string(Method m) { return m == Method::Analytic ? "analytic" : "numeric"; }

Method parse_method(std::string_view name) {
  if (name == "analytic") return Method::Analytic;
  if (name == "numeric") return Method::Numeric;
  throw Error(ErrorCode::InvalidParameter, "unknown method '" + std::string(name) + "'");
}

FermionSolution solve(const ChainSpec& spec, Method method) {
  return method == Method::Analytic ? solve_analytic(spec) : solve_numeric(spec);
}

std::vector<ModeRow> solve_modes(const ChainSpec& spec, Method method) {
  std::vector<ModeRow> rows;
  auto add = [&](int q, const QuasiMomentum& k, double lambda) {
    rows.push_back({q, std::string(tfim::to_string(k.branch)), k.param, lambda * spec.h});
  };
  if (method == Method::Analytic) {
    if (spec.kind == ModelKind::Impurity) {
      const auto s = solve_impurity(spec);
      for (int q = 0; q < s.solution.n_sites(); ++q) add(q, s.modes[q], s.solution.lambdas(q));
      return rows;
    }
    if (spec.kind == ModelKind::Junction) {
      const auto s = solve_junction(spec);
      for (int q = 0; q < s.solution.n_sites(); ++q) add(q, s.modes[q].k1, s.solution.lambdas(q));
      return rows;
    }
    throw Error(ErrorCode::InvalidParameter, "no closed form for custom chains");
  }
  const auto sol = solve_numeric(spec);
  for (int q = 0; q < sol.n_sites(); ++q) {
    const double lambda = sol.lambdas(q);
    if (spec.kind == ModelKind::Custom) {
      rows.push_back({q, "none", kNaN, lambda * spec.h});
      continue;
    }
    const double j = spec.j1 / spec.h;
    add(q, QuasiMomentum::from_cos((j * j + 1.0 - lambda * lambda) / (2.0 * j)), lambda);
  }
  return rows;
}

ScanRecord evaluate_point(const ChainSpec& spec, Method method) {
  const auto sol = solve(spec, method);
  const auto g = green_matrix(sol);
  const auto [i, j] = center_pair(spec);
  ScanRecord r = blank_record(spec, method);
  r.gap = energy_gap(sol) * spec.h;
  r.mz_total = magnetization_total(sol);
  r.site_i = i;
  r.site_j = j;
  r.cxx = corr_xx(g, i, j);
  r.cyy = corr_yy(g, i, j);
  r.czz = corr_zz(g, i, j);
  return r;
}

std::vector<double> Grid::values() const {
  if (steps < 1) throw Error(ErrorCode::InvalidParameter, "grid needs at least one step");
  if (log && !(min > 0.0 && max > 0.0)) throw Error(ErrorCode::InvalidParameter, "log grid needs positive bounds");
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) {
    const double t = steps == 1 ? 0.0 : static_cast<double>(s) / (steps - 1);
    v[s] = log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min))) : min + t * (max - min);
  }
  if (steps > 1) v.back() = max;
  return v;
}

ScanResult run_scan(const ScanConfig& config) {
  const auto j2s = config.j2.values();
  const auto hs = config.h.values();
  const int count = static_cast<int>(j2s.size() * hs.size());
  ScanResult out;
  out.records.resize(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  parallel_for(count, config.threads, [&](int idx) {
    ChainSpec spec;
    spec.kind = config.model;
    spec.n_sites = config.n;
    spec.j1 = config.j1;
    spec.j2 = j2s[static_cast<std::size_t>(idx) / hs.size()];
    spec.h = hs[static_cast<std::size_t>(idx) % hs.size()];
    try {
      spec = make_chain(spec.kind, spec.n_sites, spec.j1, spec.j2, spec.h);
      out.records[idx] = evaluate_point(spec, config.method);
    } catch (const std::exception& e) {
      out.records[idx] = blank_record(spec, config.method);
      errors[idx] = describe(spec) + ": " + e.what();
    }
  });
  for (const auto& e : errors) {
    if (e.empty()) continue;
    ++out.failures;
    out.warnings.push_back(e);
  }
  return out;
}

double find_crossing(const CrossingConfig& config, double j2) {
  auto excess = [&](double h) {
    const auto spec = make_chain(config.model, config.n, config.j1, j2, h);
    return magnetization_total(solve(spec, config.method)) - config.target;
  };
  double lo = config.h_min;
  double hi = config.h_max;
  double f_lo = excess(lo);
  const double f_hi = excess(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) return kNaN;
  while (hi - lo > config.tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f = excess(mid);
    if (f == 0.0) return mid;
    if (std::signbit(f) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CrossingResult run_crossing(const CrossingConfig& config) {
  const int count = static_cast<int>(config.j2_values.size());
  CrossingResult out;
  out.points.resize(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  parallel_for(count, config.threads, [&](int idx) {
    const double j2 = config.j2_values[idx];
    out.points[idx] = {j2, kNaN};
    char tag[64];
    std::snprintf(tag, sizeof tag, "j2=%g: ", j2);
    try {
      out.points[idx].h_star = find_crossing(config, j2);
      if (std::isnan(out.points[idx].h_star)) errors[idx] = std::string(tag) + "no sign change in the h bracket";
    } catch (const std::exception& e) {
      errors[idx] = std::string(tag) + e.what();
    }
  });
  for (const auto& e : errors) {
    if (!e.empty()) out.warnings.push_back(e);
  }
  return out;
}

CompareResult run_compare(const ChainSpec& spec, double tol) {
  CompareResult out;
  const auto [i, j] = center_pair(spec);
  out.oracle = oracle_observables(build_hamiltonian(spec), {{i, j}});
  std::vector<Method> methods;
  // The closed forms need room for two bulk segments.
  const bool closed_form = (spec.kind == ModelKind::Impurity && spec.n_sites >= 4) ||
                           (spec.kind == ModelKind::Junction && spec.n_sites >= 5);
  if (closed_form) methods.push_back(Method::Analytic);
  methods.push_back(Method::Numeric);
  for (Method m : methods) {
    PathDeviation d;
    d.method = m;
    try {
      d.max_abs_deviation = compare_to_solution(out.oracle, solve(spec, m));
      d.worst_quantity = out.oracle.worst_quantity;
      if (!(d.max_abs_deviation <= tol)) out.ok = false;
    } catch (const std::exception& e) {
      d.max_abs_deviation = kNaN;
      d.error = e.what();
      out.ok = false;
    }
    out.paths.push_back(d);
  }
  return out;
}

std::string format_real(double x) {
  if (!std::isfinite(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

void write_modes_csv(std::ostream& os, const std::vector<ModeRow>& rows) {
  os << "mode,branch,k_or_u_or_v,lambda\n";
  for (const auto& r : rows) {
    os << r.mode << ',' << r.branch << ',' << format_real(r.param) << ',' << format_real(r.lambda) << '\n';
  }
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& rows) {
  os << "model,n,j1,j2,h,method,gap,mz_total,site_i,site_j,cxx,cyy,czz\n";
  for (const auto& r : rows) {
    os << r.model << ',' << r.n << ',' << format_real(r.j1) << ',' << format_real(r.j2) << ',' << format_real(r.h)
       << ',' << r.method << ',' << format_real(r.gap) << ',' << format_real(r.mz_total) << ',' << r.site_i << ','
       << r.site_j << ',' << format_real(r.cxx) << ',' << format_real(r.cyy) << ',' << format_real(r.czz) << '\n';
  }
}

void write_crossing_csv(std::ostream& os, const std::vector<CrossingPoint>& rows) {
  os << "j2,h_star\n";
  for (const auto& r : rows) os << format_real(r.j2) << ',' << format_real(r.h_star) << '\n';
}

}  // namespace tfim::app
