// Copyright (c) 2026 The biharmonic-disk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biharmonic/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biharmonic {

namespace {

// Three-term recurrence of the orthonormal polynomials of a weight on [-1, 1]:
// x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}, p_0 = 1 / sqrt(mu0).
struct Recurrence {
  std::vector<double> a;  // a_0 .. a_{n-1}
  std::vector<double> b;  // b_0 (unused) .. b_{n-1}
  double mu0;
};

// Golub-Welsch for starting values, then Newton on p_n and Christoffel
// weights 1 / sum_k p_k(x)^2 for full accuracy.
GaussRule gauss_from_recurrence(const Recurrence& rec) {
  const int n = static_cast<int>(rec.a.size());
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = rec.a[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = rec.b[k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& guess = solver.eigenvalues();

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double p0 = 1.0 / std::sqrt(rec.mu0);
  for (int i = 0; i < n; ++i) {
    double x = guess[i];
    double christoffel = 0.0;
    for (int iter = 0; iter < 8; ++iter) {
      // orthonormal p_0..p_{n-1}, then an unnormalized p_n and its derivative
      double p_prev = 0.0, p = p0;
      double dp_prev = 0.0, dp = 0.0;
      christoffel = p * p;
      for (int k = 0; k < n; ++k) {
        const double scale = (k + 1 < n) ? rec.b[k + 1] : 1.0;
        const double b_k = (k > 0) ? rec.b[k] : 0.0;
        const double p_next = ((x - rec.a[k]) * p - b_k * p_prev) / scale;
        const double dp_next = (p + (x - rec.a[k]) * dp - b_k * dp_prev) / scale;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
        if (k + 1 < n) christoffel += p * p;
      }
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-17) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / christoffel;
  }
  return rule;
}

std::vector<Complex> unit_roots(int n) {
  std::vector<Complex> out(n);
  for (int k = 0; k < n; ++k) out[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
  return out;
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  Recurrence rec{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 2.0};
  for (int k = 1; k < n; ++k) rec.b[k] = k / std::sqrt(4.0 * k * k - 1.0);
  return gauss_from_recurrence(rec);
}

GaussRule gauss_jacobi_01(int n) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi_01: n must be positive");
  Recurrence rec{std::vector<double>(n), std::vector<double>(n, 0.0), 2.0};
  for (int k = 0; k < n; ++k) rec.a[k] = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 3.0));
  for (int k = 1; k < n; ++k) rec.b[k] = std::sqrt(k * (k + 1.0)) / (2.0 * k + 1.0);
  return gauss_from_recurrence(rec);
}

RadialRule RadialRule::gauss_jacobi(int n) {
  const GaussRule g = gauss_jacobi_01(n);
  RadialRule out;
  out.nodes.resize(n);
  out.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = 0.5 * (1.0 + g.nodes[i]);
    // int_0^1 2 r f dr = (1/2) int_{-1}^{1} (1 + x) f dx
    out.weights[i] = 0.5 * g.weights[i];
  }
  return out;
}

RadialRule RadialRule::graded(const GradedOptions& o) {
  if (o.inner_panels < 1 || o.outer_panels < 1 || o.order < 1 || !(o.r_min > 0.0) ||
      !(o.split > o.r_min && o.split < 1.0) || !(o.boundary_layer >= 0.0 && o.boundary_layer < 1.0 - o.split)) {
    throw std::invalid_argument("RadialRule::graded: invalid panel options");
  }
  std::vector<double> breaks{0.0};
  const double ratio = std::pow(o.split / o.r_min, 1.0 / o.inner_panels);
  for (int k = 0; k < o.inner_panels; ++k) breaks.push_back(o.r_min * std::pow(ratio, k));
  breaks.push_back(o.split);
  if (o.boundary_layer > 0.0) {
    // gaps to 1 shrink from 1 - split to boundary_layer
    const double shrink = std::pow(o.boundary_layer / (1.0 - o.split), 1.0 / o.outer_panels);
    for (int k = 1; k <= o.outer_panels; ++k) breaks.push_back(1.0 - (1.0 - o.split) * std::pow(shrink, k));
    breaks.push_back(1.0);
  } else {
    for (int k = 1; k <= o.outer_panels; ++k) {
      breaks.push_back(o.split + (1.0 - o.split) * k / o.outer_panels);
    }
  }

  const GaussRule g = gauss_legendre(o.order);
  RadialRule out;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double lo = breaks[p];
    const double half = 0.5 * (breaks[p + 1] - lo);
    for (int i = 0; i < o.order; ++i) {
      const double r = lo + half * (1.0 + g.nodes[i]);
      out.nodes.push_back(r);
      out.weights.push_back(2.0 * r * half * g.weights[i]);
    }
  }
  return out;
}

CircleRule::CircleRule(int n_nodes) {
  if (n_nodes < 1) throw std::invalid_argument("CircleRule: n_nodes must be positive");
  auto thetas = std::make_shared<std::vector<double>>(n_nodes);
  for (int k = 0; k < n_nodes; ++k) (*thetas)[k] = 2.0 * std::numbers::pi * k / n_nodes;
  thetas_ = std::move(thetas);
  points_ = std::make_shared<const std::vector<Complex>>(unit_roots(n_nodes));
}

DiskRule::DiskRule(std::shared_ptr<const RadialRule> radial, std::shared_ptr<const std::vector<Complex>> angles,
                   std::optional<DiskPoint> center, RadialRule::GradedOptions options)
    : radial_(std::move(radial)), angles_(std::move(angles)), center_(center), options_(options) {}

DiskRule DiskRule::plain(int n_radial, int n_angular) {
  if (n_radial < 1 || n_angular < 1) throw std::invalid_argument("DiskRule::plain: sizes must be positive");
  return DiskRule(std::make_shared<const RadialRule>(RadialRule::gauss_jacobi(n_radial)),
                  std::make_shared<const std::vector<Complex>>(unit_roots(n_angular)), std::nullopt);
}

DiskRule DiskRule::centered(DiskPoint center, int n_angular, const RadialRule::GradedOptions& options) {
  if (n_angular < 1) throw std::invalid_argument("DiskRule::centered: n_angular must be positive");
  center.require_interior("DiskRule::centered");
  return DiskRule(std::make_shared<const RadialRule>(RadialRule::graded(options)),
                  std::make_shared<const std::vector<Complex>>(unit_roots(n_angular)), center, options);
}

DiskRule DiskRule::recentered(DiskPoint center) const {
  if (!center_) throw std::invalid_argument("DiskRule::recentered: rule is not centered");
  center.require_interior("DiskRule::recentered");
  return DiskRule(radial_, angles_, center, options_);
}

DiskRule DiskRule::resolving(DiskPoint center) const {
  if (!center_) throw std::invalid_argument("DiskRule::resolving: rule is not centered");
  center.require_interior("DiskRule::resolving");
  const double gap = 1.0 - center.modulus();
  int n_angular = this->n_angular();
  if (gap * n_angular >= kResolvedAngularWidth) return recentered(center);
  while (gap * n_angular < kResolvedAngularWidth && n_angular < kMaxAngular) n_angular *= 2;
  RadialRule::GradedOptions options = options_;
  options.boundary_layer = std::min(0.25 * gap, 0.5 * (1.0 - options.split));
  return centered(center, n_angular, options);
}

}  // namespace biharmonic
