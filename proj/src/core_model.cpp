#include "tfim/core_model.hpp"

#include <cmath>
#include <string>

#include "tfim/errors.hpp"

namespace tfim {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Impurity: return "impurity";
    case ModelKind::Junction: return "junction";
    case ModelKind::Custom: return "custom";
  }
  return "custom";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "impurity") return ModelKind::Impurity;
  if (name == "junction") return ModelKind::Junction;
  if (name == "custom") return ModelKind::Custom;
  throw Error(ErrorCode::InvalidParameter, "unknown model '" + std::string(name) + "'");
}

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidParameter,
                std::string(name) + " must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

Eigen::VectorXd build_couplings(ModelKind kind, int n, double j1, double j2, double h) {
  if (n < 2) throw Error(ErrorCode::InvalidModelSize, "chain needs at least 2 sites");
  switch (kind) {
    case ModelKind::Impurity:
      if (n % 2 != 0) throw Error(ErrorCode::InvalidModelSize, "impurity chain needs even N");
      break;
    case ModelKind::Junction:
      if (n % 2 == 0) throw Error(ErrorCode::InvalidModelSize, "junction chain needs odd N");
      break;
    case ModelKind::Custom:
      throw Error(ErrorCode::InvalidParameter, "custom chains take an explicit coupling vector");
  }
  require_positive(j1, "j1");
  require_positive(j2, "j2");
  require_positive(h, "h");

  Eigen::VectorXd j = Eigen::VectorXd::Constant(n - 1, j1 / h);
  if (kind == ModelKind::Impurity) {
    j(n / 2 - 1) = j2 / h;
  } else {
    j.tail((n - 1) / 2).setConstant(j2 / h);
  }
  return j;
}

ChainSpec make_chain(ModelKind kind, int n, double j1, double j2, double h) {
  ChainSpec spec;
  spec.kind = kind;
  spec.n_sites = n;
  spec.j1 = j1;
  spec.j2 = j2;
  spec.h = h;
  spec.couplings = build_couplings(kind, n, j1, j2, h);
  return spec;
}

ChainSpec make_custom_chain(const Eigen::VectorXd& couplings, double h) {
  if (couplings.size() < 1) throw Error(ErrorCode::InvalidModelSize, "chain needs at least 2 sites");
  for (Eigen::Index i = 0; i < couplings.size(); ++i) require_positive(couplings(i), "coupling");
  require_positive(h, "h");
  ChainSpec spec;
  spec.kind = ModelKind::Custom;
  spec.n_sites = static_cast<int>(couplings.size()) + 1;
  spec.h = h;
  spec.couplings = couplings;
  return spec;
}

Eigen::MatrixXd difference_operator(const Eigen::VectorXd& couplings) {
  const Eigen::Index n = couplings.size() + 1;
  Eigen::MatrixXd d = -Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) d(i, i + 1) = couplings(i);
  return d;
}

Eigen::MatrixXd build_quadratic_form(const Eigen::VectorXd& couplings) {
  if (couplings.size() == 0) throw Error(ErrorCode::InvalidParameter, "empty coupling vector");
  for (Eigen::Index i = 0; i < couplings.size(); ++i) require_positive(couplings(i), "coupling");

  // Written out entrywise rather than as D^T D so the matrix is exactly
  // symmetric and tridiagonal.
  const Eigen::Index n = couplings.size() + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double left = i > 0 ? couplings(i - 1) : 0.0;
    m(i, i) = left * left + 1.0;
    if (i + 1 < n) {
      m(i, i + 1) = -couplings(i);
      m(i + 1, i) = -couplings(i);
    }
  }
  return m;
}

std::pair<int, int> center_pair(const ChainSpec& spec) {
  const int n = spec.n_sites;
  if (spec.kind == ModelKind::Junction) return {(n - 1) / 2, (n + 1) / 2};
  return {n / 2, n / 2 + 1};
}

}  // namespace tfim
