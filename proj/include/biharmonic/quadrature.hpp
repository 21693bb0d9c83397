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

// Fixed quadrature rules on the unit circle (mean convention, total weight 1)
// and on the unit disk (normalized area measure dA = dx dy / pi, total weight
// 1).
//
// Disk rules are tensor products of a radial rule and equally spaced angles.
// The plain scheme uses Gauss-Jacobi nodes for the weight r dr. The centered
// scheme integrates on an eta-grid that is pulled back through the Moebius
// map centered at a point z, so a logarithmic singularity at zeta = z sits at
// eta = 0 where the graded radial panels resolve it.

#pragma once

#include "biharmonic/core.hpp"
#include "biharmonic/green.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace biharmonic {

/// Nodes and weights of an n-point Gauss rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre, weight 1.
GaussRule gauss_legendre(int n);

/// Gauss-Jacobi with weight (1 + x).
GaussRule gauss_jacobi_01(int n);

/// Radial part of a disk rule: int_D f dA = sum_i weights[i] * mean_t f(nodes[i] e^{it}).
struct RadialRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  /// n Gauss-Jacobi nodes for r dr on [0, 1]; exact for r * p(r) with
  /// deg p <= 2n - 1.
  static RadialRule gauss_jacobi(int n);

  struct GradedOptions {
    int inner_panels = 32;   // geometric panels on [r_min, split]
    int outer_panels = 8;    // uniform panels on [split, 1]
    int order = 8;           // Gauss-Legendre points per panel
    double r_min = 1e-12;
    double split = 0.5;
    /// When positive, the outer panels shrink geometrically toward 1 and end
    /// with a panel of this width instead of being uniform.
    double boundary_layer = 0.0;
  };
  /// Composite Gauss-Legendre on panels graded geometrically toward 0.
  static RadialRule graded(const GradedOptions& options);
  static RadialRule graded() { return graded(GradedOptions{}); }
};

class CircleRule {
 public:
  /// n_nodes equally spaced angles 2 pi k / n_nodes with weights 1 / n_nodes.
  explicit CircleRule(int n_nodes);

  int size() const noexcept { return static_cast<int>(thetas_->size()); }
  double weight() const noexcept { return 1.0 / size(); }
  std::span<const double> thetas() const noexcept { return *thetas_; }
  /// e^{i theta_k}
  std::span<const Complex> unit_points() const noexcept { return *points_; }

  /// Mean of integrand(theta) over the nodes.
  template <class F>
  Complex integrate(F&& integrand) const {
    Complex sum{};
    for (double t : *thetas_) sum += integrand(t);
    return sum / static_cast<double>(size());
  }

 private:
  std::shared_ptr<const std::vector<double>> thetas_;
  std::shared_ptr<const std::vector<Complex>> points_;
};

template <class F>
Complex circle_integrate(const CircleRule& rule, F&& integrand) {
  return rule.integrate(std::forward<F>(integrand));
}

class DiskRule {
 public:
  inline static constexpr int kDefaultRadial = 128;
  inline static constexpr int kDefaultAngular = 256;

  /// Gauss-Jacobi radius x equal-weight angles.
  static DiskRule plain(int n_radial = kDefaultRadial, int n_angular = kDefaultAngular);

  /// Moebius-centered scheme on the graded radial rule.
  static DiskRule centered(DiskPoint center, int n_angular = kDefaultAngular,
                           const RadialRule::GradedOptions& options = {});

  /// Same eta-grid, new center. Only valid for centered rules.
  DiskRule recentered(DiskPoint center) const;

  /// Centered rule at `center` refined for centers close to the circle,
  /// where the pull-back Jacobian concentrates in a cap of width about
  /// 1 - |center| around center / |center|. The angular count doubles (up to
  /// kMaxAngular) until (1 - |center|) n_angular >= kResolvedAngularWidth and
  /// the outer radial panels grade toward the circle down to width
  /// 1 - |center|. Returns recentered(center) when no refinement is needed.
  DiskRule resolving(DiskPoint center) const;
  inline static constexpr double kResolvedAngularWidth = 32.0;
  inline static constexpr int kMaxAngular = 1 << 16;

  bool is_centered() const noexcept { return center_.has_value(); }
  std::optional<DiskPoint> center() const noexcept { return center_; }
  int n_radial() const noexcept { return static_cast<int>(radial_->nodes.size()); }
  int n_angular() const noexcept { return static_cast<int>(angles_->size()); }
  const RadialRule& radial() const noexcept { return *radial_; }
  std::span<const Complex> angular_points() const noexcept { return *angles_; }

  /// Sum over all nodes of weight * integrand(zeta), ascending radius then
  /// angle. Centered rules include the pull-back Jacobian in the weight.
  template <class F>
  Complex integrate(F&& integrand) const;

 private:
  DiskRule(std::shared_ptr<const RadialRule> radial, std::shared_ptr<const std::vector<Complex>> angles,
           std::optional<DiskPoint> center, RadialRule::GradedOptions options = {});

  std::shared_ptr<const RadialRule> radial_;
  std::shared_ptr<const std::vector<Complex>> angles_;
  std::optional<DiskPoint> center_;
  RadialRule::GradedOptions options_;  // panels of a centered rule
};

template <class F>
Complex DiskRule::integrate(F&& integrand) const {
  const auto& r_nodes = radial_->nodes;
  const auto& r_weights = radial_->weights;
  const auto& units = *angles_;
  const double angular_weight = 1.0 / static_cast<double>(units.size());
  Complex total{};
  if (!center_) {
    for (std::size_t i = 0; i < r_nodes.size(); ++i) {
      Complex ring{};
      for (const Complex& u : units) ring += integrand(r_nodes[i] * u);
      total += r_weights[i] * angular_weight * ring;
    }
    return total;
  }
  const MobiusMap map(*center_);
  for (std::size_t i = 0; i < r_nodes.size(); ++i) {
    Complex ring{};
    for (const Complex& u : units) {
      const Complex eta = r_nodes[i] * u;
      ring += map.jacobian(eta) * integrand(map.apply(eta));
    }
    total += r_weights[i] * angular_weight * ring;
  }
  return total;
}

/// Plain-scheme disk integral; throws std::invalid_argument for a centered rule.
template <class F>
Complex disk_integrate(const DiskRule& rule, F&& integrand) {
  if (rule.is_centered()) throw std::invalid_argument("disk_integrate: rule must use the plain scheme");
  return rule.integrate(std::forward<F>(integrand));
}

/// Centered-scheme disk integral; throws std::invalid_argument for a plain rule.
template <class F>
Complex disk_integrate_centered(const DiskRule& rule, F&& integrand) {
  if (!rule.is_centered()) throw std::invalid_argument("disk_integrate_centered: rule must be centered");
  return rule.integrate(std::forward<F>(integrand));
}

}  // namespace biharmonic
