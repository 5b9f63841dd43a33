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

#include "statfem/exact_prior.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "statfem/errors.hpp"
#include "statfem/quadrature.hpp"

namespace statfem {
namespace {

constexpr int kRowBlock = 512;

struct Rule1D {
  std::vector<Point> nodes;
  Eigen::VectorXd weights;
};

Rule1D composite_rule(const std::vector<double>& breaks, double width, const GaussLegendreRule& gl) {
  Rule1D rule;
  std::vector<double> w;
  for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
    const double lo = breaks[b];
    const double len = breaks[b + 1] - lo;
    const int panels = std::max(1, static_cast<int>(std::ceil(len / width - 1e-12)));
    const double step = len / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = lo + (p + 0.5) * step;
      for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
        rule.nodes.push_back({mid + 0.5 * step * gl.nodes[q], 0.0});
        w.push_back(0.5 * step * gl.weights[q]);
      }
    }
  }
  rule.weights = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  return rule;
}

PointMoments integrate(const ForcingModel& model, std::span<const Point> points, const Rule1D& rule) {
  const int m = static_cast<int>(points.size());
  const int nq = static_cast<int>(rule.nodes.size());
  // r(q, k) = w_q G(t_q, x_k)
  Eigen::MatrixXd r(nq, m);
  for (int k = 0; k < m; ++k) {
    for (int q = 0; q < nq; ++q) r(q, k) = rule.weights[q] * greens_eval(rule.nodes[q].x, points[k].x);
  }
  PointMoments out;
  out.cov = Eigen::MatrixXd::Zero(m, m);
  const std::span<const Point> all(rule.nodes);
  for (int start = 0; start < nq; start += kRowBlock) {
    const int len = std::min(kRowBlock, nq - start);
    const Eigen::MatrixXd h = kernel_matrix(model, all.subspan(start, len), all) * r;
    out.cov.noalias() += r.middleRows(start, len).transpose() * h;
  }
  out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();

  out.mean.resize(m);
  if (model.has_constant_mean()) {
    for (int k = 0; k < m; ++k) out.mean[k] = 0.5 * model.mean_value * points[k].x * (1.0 - points[k].x);
  } else {
    Eigen::VectorXd f(nq);
    for (int q = 0; q < nq; ++q) f[q] = model.mean(rule.nodes[q]);
    out.mean = r.transpose() * f;
  }
  return out;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

double greens_eval(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    throw InvalidArgument("greens_eval: arguments must lie in [0,1], got (" + std::to_string(x) +
                          ", " + std::to_string(y) + ")");
  }
  return y >= x ? x * (1.0 - y) : (1.0 - x) * y;
}

PointMoments exact_moments(const ForcingModel& model, std::span<const Point> points,
                           const ExactPriorOptions& options) {
  model.validate();
  std::vector<double> breaks = {0.0, 1.0};
  for (const auto& p : points) {
    if (!(p.x >= 0.0 && p.x <= 1.0) || p.y != 0.0) {
      throw OutOfDomainError("exact prior: point (" + std::to_string(p.x) + ", " +
                             std::to_string(p.y) + ") is not in [0,1]");
    }
    breaks.push_back(p.x);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const GaussLegendreRule gl = gauss_legendre(options.gauss_points);
  double width = 0.5 * model.length_scale;
  PointMoments prev = integrate(model, points, composite_rule(breaks, width, gl));
  double change = 0.0;
  for (int level = 1; level <= options.max_refinements; ++level) {
    width *= 0.5;
    PointMoments next = integrate(model, points, composite_rule(breaks, width, gl));
    const double scale = std::max(max_abs(next.cov), 1e-300);
    change = max_abs(next.cov - prev.cov) / scale;
    const double mean_scale = std::max(max_abs(next.mean), 1e-300);
    change = std::max(change, max_abs(next.mean - prev.mean) / mean_scale);
    prev = std::move(next);
    if (change < options.rel_tol || max_abs(prev.cov) == 0.0) return prev;
  }
  throw AccuracyError("exact prior quadrature did not converge: relative change " +
                      std::to_string(change) + " after " + std::to_string(options.max_refinements) +
                      " refinements");
}

GaussianField exact_prior_on_grid(const ForcingModel& model, GridPtr grid,
                                  const ExactPriorOptions& options) {
  if (grid->dim != 1) throw InvalidArgument("exact prior is only available in 1D");
  auto moments = exact_moments(model, grid->points, options);
  return {std::move(grid), std::move(moments.mean), std::move(moments.cov)};
}

PriorWithSensors exact_prior_with_sensors(const ForcingModel& model, GridPtr grid,
                                          const std::vector<Point>& sensors,
                                          const ExactPriorOptions& options) {
  if (grid->dim != 1) throw InvalidArgument("exact prior is only available in 1D");
  const auto pts = augmented_points(*grid, sensors);
  const auto moments = exact_moments(model, pts, options);
  return split_joint(std::move(grid), moments.mean, moments.cov);
}

}  // namespace statfem
