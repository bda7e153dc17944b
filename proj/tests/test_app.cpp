#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tfim/app.hpp"
#include "tfim/core_model.hpp"
#include "tfim/errors.hpp"

namespace {

using tfim::app::Method;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TFIM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tfim_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Grid, LinearAndGeometricValues) {
  const auto lin = tfim::app::Grid{1.0, 2.0, 5, false}.values();
  ASSERT_EQ(lin.size(), 5u);
  EXPECT_DOUBLE_EQ(lin[1], 1.25);
  EXPECT_DOUBLE_EQ(lin.back(), 2.0);
  const auto geo = tfim::app::Grid{0.01, 100.0, 5, true}.values();
  EXPECT_NEAR(geo[1], 0.1, 1e-15);
  EXPECT_NEAR(geo[2], 1.0, 1e-14);
  EXPECT_EQ((tfim::app::Grid{3.0, 7.0, 1, false}.values()), (std::vector<double>{3.0}));
  EXPECT_THROW((tfim::app::Grid{0.0, 1.0, 3, true}.values()), tfim::Error);
}

TEST(Csv, NumberFormatAndHeaders) {
  EXPECT_EQ(tfim::app::format_real(0.5), "5.000000000000e-01");
  EXPECT_EQ(tfim::app::format_real(-1234.5), "-1.234500000000e+03");
  EXPECT_EQ(tfim::app::format_real(std::nan("")), "nan");
  std::ostringstream modes, scan, cross;
  tfim::app::write_modes_csv(modes, {});
  tfim::app::write_scan_csv(scan, {});
  tfim::app::write_crossing_csv(cross, {{0.5, std::nan("")}});
  EXPECT_EQ(modes.str(), "mode,branch,k_or_u_or_v,lambda\n");
  EXPECT_EQ(scan.str(), "model,n,j1,j2,h,method,gap,mz_total,site_i,site_j,cxx,cyy,czz\n");
  EXPECT_EQ(cross.str(), "j2,h_star\n5.000000000000e-01,nan\n");
}

TEST(Scan, SinglePointMatchesEvaluatePoint) {
  tfim::app::ScanConfig cfg;
  cfg.model = tfim::ModelKind::Junction;
  cfg.n = 9;
  cfg.j2 = {2.0, 2.0, 1, false};
  cfg.h = {0.5, 0.5, 1, false};
  const auto res = tfim::app::run_scan(cfg);
  ASSERT_EQ(res.records.size(), 1u);
  const auto direct = tfim::app::evaluate_point(tfim::make_chain(tfim::ModelKind::Junction, 9, 1.0, 2.0, 0.5),
                                                Method::Analytic);
  EXPECT_EQ(res.records[0].gap, direct.gap);
  EXPECT_EQ(res.records[0].cxx, direct.cxx);
  EXPECT_EQ(res.records[0].site_i, 4);
  EXPECT_EQ(res.failures, 0);
}

TEST(Scan, MethodsAgreeAcrossGrid) {
  tfim::app::ScanConfig cfg;
  cfg.model = tfim::ModelKind::Impurity;
  cfg.n = 10;
  cfg.j2 = {0.25, 4.0, 4, true};
  cfg.h = {0.05, 20.0, 5, true};
  cfg.threads = 3;
  const auto a = tfim::app::run_scan(cfg);
  cfg.method = Method::Numeric;
  const auto n = tfim::app::run_scan(cfg);
  ASSERT_EQ(a.records.size(), n.records.size());
  for (std::size_t r = 0; r < a.records.size(); ++r) {
    EXPECT_NEAR(a.records[r].gap, n.records[r].gap, 1e-7);
    EXPECT_NEAR(a.records[r].mz_total, n.records[r].mz_total, 1e-7);
    EXPECT_NEAR(a.records[r].cxx, n.records[r].cxx, 1e-7);
    EXPECT_NEAR(a.records[r].cyy, n.records[r].cyy, 1e-7);
    EXPECT_NEAR(a.records[r].czz, n.records[r].czz, 1e-7);
  }
}

TEST(Crossing, UnreachableTargetIsNan) {
  tfim::app::CrossingConfig cfg;
  cfg.target = 1.0;
  EXPECT_TRUE(std::isnan(tfim::app::find_crossing(cfg, 1.0)));
  cfg.target = 0.5;
  const double h = tfim::app::find_crossing(cfg, 1.0);
  EXPECT_GT(h, 0.5);
  EXPECT_LT(h, 1.0);
}

TEST(Compare, AllPathsAgreeWithOracle) {
  const auto res = tfim::app::run_compare(tfim::make_chain(tfim::ModelKind::Impurity, 6, 1.0, 3.0, 0.8), 1e-8);
  EXPECT_TRUE(res.ok);
  EXPECT_EQ(res.paths.size(), 2u);
  const auto small = tfim::app::run_compare(tfim::make_custom_chain(Eigen::VectorXd::Ones(1)), 1e-8);
  EXPECT_TRUE(small.ok);
  EXPECT_EQ(small.paths.size(), 1u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("solve --model impurity --n 4 --j2 2 --h 1"), 0);
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("solve --model impurity --n 5 --j2 1 --h 1"), 2);
  EXPECT_EQ(run_cli("solve --model ladder --n 4"), 2);
  EXPECT_EQ(run_cli("compare --model impurity --n 13 --j2 1 --h 1"), 2);
  EXPECT_EQ(run_cli("compare --model junction --n 7 --j2 0.5 --h 2"), 0);
}

TEST(Cli, ScanCsvMatchesLibrary) {
  const auto out = scratch("scan.csv");
  ASSERT_EQ(run_cli("scan --model junction --n 7 --j2-min 0.5 --j2-max 2 --j2-steps 2 --h-min 0.1 --h-max 10 "
                    "--h-steps 3 --log-h --method numeric --out " + out.string()),
            0);
  tfim::app::ScanConfig cfg;
  cfg.model = tfim::ModelKind::Junction;
  cfg.n = 7;
  cfg.j2 = {0.5, 2.0, 2, false};
  cfg.h = {0.1, 10.0, 3, true};
  cfg.method = Method::Numeric;
  std::ostringstream expected;
  tfim::app::write_scan_csv(expected, tfim::app::run_scan(cfg).records);
  EXPECT_EQ(read_file(out), expected.str());
  std::filesystem::remove(out);
}

TEST(Cli, ConfigFileAndOverride) {
  const auto cfg = scratch("cfg.json");
  const auto out = scratch("modes.csv");
  std::ofstream(cfg) << R"({"solve": {"model": "junction", "n": 7, "j2": 2.0, "h": 0.5}, "method": "numeric"})";
  ASSERT_EQ(run_cli("--config " + cfg.string() + " solve --out " + out.string()), 0);
  std::ostringstream expected;
  tfim::app::write_modes_csv(expected,
                             tfim::app::solve_modes(tfim::make_chain(tfim::ModelKind::Junction, 7, 1.0, 2.0, 0.5),
                                                    Method::Numeric));
  EXPECT_EQ(read_file(out), expected.str());
  ASSERT_EQ(run_cli("--config " + cfg.string() + " solve --n 9 --out " + out.string()), 0);
  const auto text = read_file(out);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}

}  // namespace
