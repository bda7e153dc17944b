#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include "tfim/errors.hpp"

namespace tfim {

template <typename Scalar>
struct SymmetricEigen {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;               ///< ascending
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;  ///< column k pairs with values(k)
};

/// Cyclic Jacobi eigensolver for a dense real symmetric matrix.
///
/// Each sweep visits every (p, q) pair above the diagonal and annihilates it
/// with a plane rotation. The loop stops once the off-diagonal Frobenius mass
/// drops below machine precision relative to the whole matrix. Accuracy is
/// backward stable: |lambda_computed - lambda| is of order eps * ||A||.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> eigh_symmetric(const Eigen::MatrixBase<Derived>& m,
                                                        int max_sweeps = 64) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using std::abs;

  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  const Eigen::Index n = m.rows();

  const Scalar scale = std::max(Scalar(1), m.cwiseAbs().maxCoeff());
  const Scalar asym = n > 0 ? (m - m.transpose()).cwiseAbs().maxCoeff() : Scalar(0);
  if (asym > Scalar(1e-12) * scale) {
    throw Error(ErrorCode::NotSymmetric, "max |m - m^T| = " + std::to_string(double(asym)));
  }

  Matrix a = (m + m.transpose()) / Scalar(2);
  Matrix v = Matrix::Identity(n, n);

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar total = a.squaredNorm();
  auto off_diagonal = [&a, n] {
    Scalar off(0);
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off += a(p, q) * a(p, q);
    return off;
  };

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal() <= eps * eps * total) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }
  if (!converged && off_diagonal() > eps * eps * total) {
    throw Error(ErrorCode::ConvergenceFailure,
                "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  SymmetricEigen<Scalar> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace tfim
