// tfim: solve, scan and cross-check inhomogeneous transverse-field Ising chains.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfim/app.hpp"
#include "tfim/errors.hpp"

namespace {

using tfim::app::Method;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kIncomplete = 3, kAllFailed = 4, kMismatch = 5 };

// Reads JSON whose keys are long option names of the active subcommand, either
// at top level or nested under the subcommand name. Values already given on the
// command line win.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError("config", e.what());
    }
    if (!doc.is_object()) throw CLI::ConversionError("config", "expected a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto* sub : root_->get_subcommands()) {
      const std::vector<std::string> parents{sub->get_name()};
      const auto nested = doc.find(sub->get_name());
      if (nested != doc.end() && nested->is_object()) add_items(*nested, parents, items);
      for (const auto& [key, value] : doc.items()) {
        if (!value.is_object()) add_item(key, value, parents, items);
      }
    }
    return items;
  }

 private:
  static std::string scalar(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static void add_item(const std::string& key, const nlohmann::json& value, const std::vector<std::string>& parents,
                       std::vector<CLI::ConfigItem>& items) {
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = key;
    if (value.is_array()) {
      for (const auto& v : value) item.inputs.push_back(scalar(v));
    } else {
      item.inputs.push_back(scalar(value));
    }
    items.push_back(std::move(item));
  }

  static void add_items(const nlohmann::json& obj, const std::vector<std::string>& parents,
                        std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) add_item(key, value, parents, items);
  }

  const CLI::App* root_;
};

struct ModelFlags {
  std::string model = "impurity";
  int n = 10;
  double j1 = 1.0;
  double j2 = 1.0;
  double h = 1.0;
  std::string method = "analytic";
  std::string out;
  int threads = 1;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
  cmd->add_option("--model", f.model, "impurity, junction or custom")
      ->check(CLI::IsMember({"impurity", "junction", "custom"}));
  cmd->add_option("--n", f.n, "number of sites")->check(CLI::PositiveNumber);
  cmd->add_option("--j1", f.j1, "host coupling J1")->check(CLI::PositiveNumber);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw tfim::Error(tfim::ErrorCode::InvalidParameter, "cannot open " + path);
  return file;
}

int exit_for(const tfim::Error& e) {
  switch (e.code()) {
    case tfim::ErrorCode::IncompleteSpectrum: return kIncomplete;
    case tfim::ErrorCode::InvalidModelSize:
    case tfim::ErrorCode::InvalidParameter:
    case tfim::ErrorCode::InvalidSitePair:
    case tfim::ErrorCode::TooLarge: return kUsage;
    default: return kFailure;
  }
}

tfim::ChainSpec chain_from(const ModelFlags& f, const std::vector<double>& couplings) {
  const auto kind = tfim::parse_model_kind(f.model);
  if (kind != tfim::ModelKind::Custom) return tfim::make_chain(kind, f.n, f.j1, f.j2, f.h);
  if (couplings.empty()) throw tfim::Error(tfim::ErrorCode::InvalidParameter, "custom model needs --couplings");
  Eigen::VectorXd j(static_cast<Eigen::Index>(couplings.size()));
  for (std::size_t i = 0; i < couplings.size(); ++i) j(static_cast<Eigen::Index>(i)) = couplings[i] / f.h;
  return tfim::make_custom_chain(j, f.h);
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact free-fermion solver for inhomogeneous transverse-field Ising chains"};
  // --h is the field, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "JSON file with option values (command-line flags take precedence)");
  app.config_formatter(std::make_shared<JsonConfig>(&app));

  ModelFlags f;
  std::vector<double> couplings;

  auto* solve = app.add_subcommand("solve", "quasiparticle energies of one chain");
  add_model_flags(solve, f);
  solve->add_option("--j2", f.j2, "impurity or second-half coupling J2")->check(CLI::PositiveNumber);
  solve->add_option("--h", f.h, "transverse field")->check(CLI::PositiveNumber);
  solve->add_option("--couplings", couplings, "bond couplings J_i for --model custom");
  solve->add_option("--method", f.method, "analytic or numeric")->check(CLI::IsMember({"analytic", "numeric"}));
  solve->add_option("--out", f.out, "CSV output path (default stdout)");

  tfim::app::Grid j2_grid{0.25, 4.0, 9, false};
  tfim::app::Grid h_grid{0.01, 100.0, 25, false};
  auto* scan = app.add_subcommand("scan", "observables over a (J2, h) grid");
  add_model_flags(scan, f);
  scan->add_option("--j2-min", j2_grid.min, "smallest J2")->check(CLI::PositiveNumber);
  scan->add_option("--j2-max", j2_grid.max, "largest J2")->check(CLI::PositiveNumber);
  scan->add_option("--j2-steps", j2_grid.steps, "number of J2 values")->check(CLI::PositiveNumber);
  scan->add_option("--h-min", h_grid.min, "smallest field")->check(CLI::PositiveNumber);
  scan->add_option("--h-max", h_grid.max, "largest field")->check(CLI::PositiveNumber);
  scan->add_option("--h-steps", h_grid.steps, "number of field values")->check(CLI::PositiveNumber);
  scan->add_flag("--log-h", h_grid.log, "geometric spacing in h");
  scan->add_option("--method", f.method, "analytic or numeric")->check(CLI::IsMember({"analytic", "numeric"}));
  scan->add_option("--out", f.out, "CSV output path (default stdout)");
  scan->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);

  tfim::app::CrossingConfig cross_cfg;
  std::vector<double> j2_list;
  tfim::app::Grid j2_range{0.25, 4.0, 0, false};
  auto* crossing = app.add_subcommand("crossing", "field where the mean transverse magnetization hits a target");
  add_model_flags(crossing, f);
  crossing->add_option("--j2", j2_list, "explicit J2 values");
  crossing->add_option("--j2-min", j2_range.min, "smallest J2")->check(CLI::PositiveNumber);
  crossing->add_option("--j2-max", j2_range.max, "largest J2")->check(CLI::PositiveNumber);
  crossing->add_option("--j2-steps", j2_range.steps, "number of J2 values")->check(CLI::PositiveNumber);
  crossing->add_option("--target", cross_cfg.target, "magnetization level");
  crossing->add_option("--tol", cross_cfg.tol, "bracket width in h")->check(CLI::PositiveNumber);
  crossing->add_option("--h-min", cross_cfg.h_min, "smallest field")->check(CLI::PositiveNumber);
  crossing->add_option("--h-max", cross_cfg.h_max, "largest field")->check(CLI::PositiveNumber);
  crossing->add_option("--method", f.method, "analytic or numeric")->check(CLI::IsMember({"analytic", "numeric"}));
  crossing->add_option("--out", f.out, "CSV output path (default stdout)");
  crossing->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);

  double compare_tol = 1e-8;
  auto* compare = app.add_subcommand("compare", "check both solution paths against exact diagonalization");
  add_model_flags(compare, f);
  compare->add_option("--j2", f.j2, "impurity or second-half coupling J2")->check(CLI::PositiveNumber);
  compare->add_option("--h", f.h, "transverse field")->check(CLI::PositiveNumber);
  compare->add_option("--couplings", couplings, "bond couplings J_i for --model custom");
  compare->add_option("--tol", compare_tol, "largest accepted deviation from exact diagonalization")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const Method method = tfim::app::parse_method(f.method);
    std::ofstream file;

    if (solve->parsed()) {
      const auto rows = tfim::app::solve_modes(chain_from(f, couplings), method);
      tfim::app::write_modes_csv(open_out(f.out, file), rows);
      return kOk;
    }

    if (scan->parsed()) {
      tfim::app::ScanConfig cfg;
      cfg.model = tfim::parse_model_kind(f.model);
      cfg.n = f.n;
      cfg.j1 = f.j1;
      cfg.j2 = j2_grid;
      cfg.h = h_grid;
      cfg.method = method;
      cfg.threads = f.threads;
      const auto result = tfim::app::run_scan(cfg);
      print_warnings(result.warnings);
      tfim::app::write_scan_csv(open_out(f.out, file), result.records);
      return !result.records.empty() && result.failures == static_cast<int>(result.records.size()) ? kAllFailed
                                                                                                    : kOk;
    }

    if (crossing->parsed()) {
      cross_cfg.model = tfim::parse_model_kind(f.model);
      cross_cfg.n = f.n;
      cross_cfg.j1 = f.j1;
      cross_cfg.method = method;
      cross_cfg.threads = f.threads;
      cross_cfg.j2_values = j2_list;
      if (j2_range.steps > 0) {
        const auto extra = j2_range.values();
        cross_cfg.j2_values.insert(cross_cfg.j2_values.end(), extra.begin(), extra.end());
      }
      if (cross_cfg.j2_values.empty()) cross_cfg.j2_values = {1.0};
      const auto result = tfim::app::run_crossing(cross_cfg);
      print_warnings(result.warnings);
      tfim::app::write_crossing_csv(open_out(f.out, file), result.points);
      return kOk;
    }

    if (compare->parsed()) {
      const auto spec = chain_from(f, couplings);
      const auto result = tfim::app::run_compare(spec, compare_tol);
      const auto& o = result.oracle;
      std::printf("oracle e0=%s gap=%s\n", tfim::app::format_real(o.e0 * spec.h).c_str(),
                  tfim::app::format_real(o.gap * spec.h).c_str());
      for (const auto& p : o.pairs) {
        std::printf("oracle pair (%d,%d) cxx=%s cyy=%s czz=%s\n", p.i, p.j, tfim::app::format_real(p.xx).c_str(),
                    tfim::app::format_real(p.yy).c_str(), tfim::app::format_real(p.zz).c_str());
      }
      for (Eigen::Index i = 0; i < o.mz_site.size(); ++i) {
        std::printf("oracle mz(%d)=%s\n", static_cast<int>(i + 1), tfim::app::format_real(o.mz_site(i)).c_str());
      }
      for (const auto& d : result.paths) {
        const auto name = std::string(tfim::app::to_string(d.method));
        if (!d.error.empty()) {
          std::printf("%s: failed: %s\n", name.c_str(), d.error.c_str());
          continue;
        }
        std::printf("%s: max_abs_deviation=%s worst=%s\n", name.c_str(),
                    tfim::app::format_real(d.max_abs_deviation).c_str(), d.worst_quantity.c_str());
        if (!(d.max_abs_deviation <= compare_tol)) {
          std::fprintf(stderr, "mismatch on %s path: %s deviates by %s\n", name.c_str(), d.worst_quantity.c_str(),
                       tfim::app::format_real(d.max_abs_deviation).c_str());
        }
      }
      return result.ok ? kOk : kMismatch;
    }
  } catch (const tfim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
