#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tfim/core_model.hpp"
#include "tfim/ed_oracle.hpp"
#include "tfim/numeric_solver.hpp"

namespace tfim::app {

enum class Method { Analytic, Numeric };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

FermionSolution solve(const ChainSpec& spec, Method method);

/// One line of the modes file. Lambda is in physical units (times h).
struct ModeRow {
  int mode = 0;
  std::string branch;
  double param = 0.0;
  double lambda = 0.0;
};

/// Modes ascending in Lambda. The numeric path reports the host-band momentum
/// implied by each Lambda; custom chains have no momentum and report "none".
std::vector<ModeRow> solve_modes(const ChainSpec& spec, Method method);

struct ScanRecord {
  std::string model;
  int n = 0;
  double j1 = 0.0;
  double j2 = 0.0;
  double h = 0.0;
  std::string method;
  double gap = 0.0;  // physical units
  double mz_total = 0.0;
  int site_i = 0;
  int site_j = 0;
  double cxx = 0.0;
  double cyy = 0.0;
  double czz = 0.0;
};

/// Observables at one point; throws tfim::Error on failure.
ScanRecord evaluate_point(const ChainSpec& spec, Method method);

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;
  bool log = false;

  std::vector<double> values() const;
};

struct ScanConfig {
  ModelKind model = ModelKind::Impurity;
  int n = 10;
  double j1 = 1.0;
  Grid j2;
  Grid h;
  Method method = Method::Analytic;
  int threads = 1;
};

struct ScanResult {
  std::vector<ScanRecord> records;  // J2 outer, h inner
  int failures = 0;
  std::vector<std::string> warnings;
};

ScanResult run_scan(const ScanConfig& config);

struct CrossingConfig {
  ModelKind model = ModelKind::Impurity;
  int n = 10;
  double j1 = 1.0;
  std::vector<double> j2_values;
  double target = 0.5;
  double tol = 1e-6;
  double h_min = 0.01;
  double h_max = 100.0;
  Method method = Method::Analytic;
  int threads = 1;
};

struct CrossingPoint {
  double j2 = 0.0;
  double h_star = 0.0;  // NaN when the bracket shows no sign change
};

/// Field at which magnetization_total equals `target`, by bisection in h.
double find_crossing(const CrossingConfig& config, double j2);

struct CrossingResult {
  std::vector<CrossingPoint> points;
  std::vector<std::string> warnings;
};

CrossingResult run_crossing(const CrossingConfig& config);

struct PathDeviation {
  Method method = Method::Numeric;
  double max_abs_deviation = 0.0;
  std::string worst_quantity;
  std::string error;  // set when the path failed to produce a solution
};

struct CompareResult {
  OracleReport oracle;
  std::vector<PathDeviation> paths;
  bool ok = true;
};

/// Oracle comparison at the center pair for every applicable solution path.
CompareResult run_compare(const ChainSpec& spec, double tol);

/// "%.12e", or "nan" for non-finite values.
std::string format_real(double x);

void write_modes_csv(std::ostream& os, const std::vector<ModeRow>& rows);
void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& rows);
void write_crossing_csv(std::ostream& os, const std::vector<CrossingPoint>& rows);

}  // namespace tfim::app
