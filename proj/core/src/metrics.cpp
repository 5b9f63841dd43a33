// Copyright 2026 The statfem-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "statfem/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

void check_symmetric(const Eigen::MatrixXd& c) {
  if (c.rows() != c.cols()) throw InvalidArgument("matrix is not square");
  if (c.size() == 0) return;
  const double scale = c.cwiseAbs().maxCoeff();
  const double asym = (c - c.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    throw InvalidArgument("matrix is not symmetric (max asymmetry " + std::to_string(asym) +
                          " vs scale " + std::to_string(scale) + ")");
  }
}

// tr sqrt(S1 C2 S1) with S1, S2 the symmetric roots, as the nuclear norm of
// S1 S2. Singular values of the product keep the small eigen-directions
// accurate where an eigensolve of S1 C2 S1 would lose them to roundoff.
double bures_cross_term(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2) {
  const Eigen::MatrixXd prod = s1 * s2;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(prod);
  return svd.singularValues().sum();
}

double combine(double mean_sq, double tr1, double tr2, double cross) {
  return std::sqrt(std::max(0.0, mean_sq + tr1 + tr2 - 2.0 * cross));
}

}  // namespace

PsdSqrtResult sym_psd_sqrt(const Eigen::MatrixXd& c, double tol) {
  check_symmetric(c);
  PsdSqrtResult out;
  if (c.size() == 0) return out;
  const Eigen::MatrixXd sym = 0.5 * (c + c.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  Eigen::VectorXd lambda = eig.eigenvalues();
  const double lmax = std::max(lambda.maxCoeff(), 0.0);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0.0) out.clamped_mass -= lambda[i];
    if (lambda[i] < tol * lmax || lambda[i] <= 0.0) lambda[i] = 0.0;
  }
  const Eigen::MatrixXd& v = eig.eigenvectors();
  out.sqrt = v * lambda.cwiseSqrt().asDiagonal() * v.transpose();
  out.sqrt = 0.5 * (out.sqrt + out.sqrt.transpose()).eval();
  out.eigenvalues = std::move(lambda);
  return out;
}

PreparedGaussian prepare_gaussian(const GaussianField& field) {
  const Eigen::VectorXd sw = field.grid->weights.cwiseSqrt();
  if (field.mean.size() != sw.size() || field.cov.rows() != sw.size()) {
    throw InvalidArgument("field moments do not match its grid");
  }
  PreparedGaussian out;
  out.grid = field.grid;
  out.mean = sw.cwiseProduct(field.mean);
  const Eigen::MatrixXd weighted = sw.asDiagonal() * field.cov * sw.asDiagonal();
  auto root = sym_psd_sqrt(weighted);
  out.sqrt_cov = std::move(root.sqrt);
  out.trace = root.eigenvalues.sum();
  return out;
}

double wasserstein2_gaussian(const Eigen::VectorXd& m1, const Eigen::MatrixXd& c1,
                             const Eigen::VectorXd& m2, const Eigen::MatrixXd& c2) {
  if (m1.size() != m2.size() || c1.rows() != m1.size() || c2.rows() != m2.size()) {
    throw IncompatibleFieldsError("Gaussian dimensions differ");
  }
  const auto r1 = sym_psd_sqrt(c1);
  const auto r2 = sym_psd_sqrt(c2);
  return combine((m1 - m2).squaredNorm(), r1.eigenvalues.sum(), r2.eigenvalues.sum(),
                 bures_cross_term(r1.sqrt, r2.sqrt));
}

double wasserstein2_prepared(const PreparedGaussian& a, const PreparedGaussian& b) {
  if (!a.grid || !b.grid || !same_grid(*a.grid, *b.grid)) {
    throw IncompatibleFieldsError("fields live on different reference grids");
  }
  return combine((a.mean - b.mean).squaredNorm(), a.trace, b.trace,
                 bures_cross_term(a.sqrt_cov, b.sqrt_cov));
}

double wasserstein2_gaussian_fields(const GaussianField& a, const GaussianField& b) {
  if (!a.grid || !b.grid || !same_grid(*a.grid, *b.grid)) {
    throw IncompatibleFieldsError("fields live on different reference grids");
  }
  return wasserstein2_prepared(prepare_gaussian(a), prepare_gaussian(b));
}

double wasserstein2_univariate_gaussian(const UnivariateGaussian& a, const UnivariateGaussian& b) {
  if (!(a.variance >= 0.0) || !(b.variance >= 0.0)) {
    throw InvalidArgument("univariate Gaussian with negative variance");
  }
  const double dm = a.mean - b.mean;
  const double ds = std::sqrt(a.variance) - std::sqrt(b.variance);
  return std::sqrt(dm * dm + ds * ds);
}

double wasserstein2_empirical_1d(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw InvalidArgument("empirical W2 needs two non-empty samples of equal size (got " +
                          std::to_string(xs.size()) + " and " + std::to_string(ys.size()) + ")");
  }
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc / static_cast<double>(a.size()));
}

}  // namespace statfem
