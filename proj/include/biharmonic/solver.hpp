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


// The representation formula
//
//   Phi(z) = F0[f](z) + H0[h](z) - G[g](z)
//
// for the biharmonic Dirichlet problem Delta^2 Phi = g in the disk, Phi = f
// and the inward normal derivative -dPhi/dr = h on the circle. Boundary
// transforms use the equal-weight circle rule; the Green potential uses the
// Moebius-centered disk rule at the evaluation point.

#pragma once

#include "biharmonic/boundary.hpp"
#include "biharmonic/core.hpp"
#include "biharmonic/quadrature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biharmonic {

/// Data triple (f, h, g).
struct Case {
  BoundaryData f;
  BoundaryData h;
  SourceTerm g;

  friend bool operator==(const Case&, const Case&) = default;
};

/// a x + b y for each of the three channels.
Case linear_combination(Complex a, const Case& x, Complex b, const Case& y);

struct QuadratureSizes {
  int circle_nodes = 512;
  int disk_radial = DiskRule::kDefaultRadial;
  int disk_angular = DiskRule::kDefaultAngular;
  RadialRule::GradedOptions centered{};

  friend bool operator==(const QuadratureSizes& x, const QuadratureSizes& y) {
    return x.circle_nodes == y.circle_nodes && x.disk_radial == y.disk_radial &&
           x.disk_angular == y.disk_angular && x.centered.inner_panels == y.centered.inner_panels &&
           x.centered.outer_panels == y.centered.outer_panels && x.centered.order == y.centered.order &&
           x.centered.r_min == y.centered.r_min && x.centered.split == y.centered.split;
  }
};

/// The circle rule and the centered disk rule (centered at 0; moved to each
/// evaluation point with DiskRule::resolving) built from a set of sizes.
struct Rules {
  explicit Rules(const QuadratureSizes& sizes = {});

  CircleRule circle;
  DiskRule disk;
};

/// Circle mean of F0(z e^{-i theta}) f(theta).
Complex f0_transform(const BoundaryData& f, DiskPoint z, const CircleRule& rule);

/// Circle mean of H0(z e^{-i theta}) h(theta).
Complex h0_transform(const BoundaryData& h, DiskPoint z, const CircleRule& rule);

/// int G(z, zeta) g(zeta) dA(zeta). `rule` must be a centered rule; it is
/// moved to z with DiskRule::resolving, which refines it close to the circle.
Complex green_potential(const SourceTerm& g, DiskPoint z, const DiskRule& rule);

/// Point evaluation of Phi and of its gradient. The boundary transforms run
/// on rules.circle refined by resolving_circle_size(|z|, n, kEvaluationFactor),
/// which keeps values and first derivatives at full accuracy up to the
/// circle.
Complex solve_point(const Case& data, DiskPoint z, const Rules& rules);
WirtingerPair gradient_point(const Case& data, DiskPoint z, const Rules& rules);

/// Near-boundary policy: an n-node circle rule resolves the boundary kernels
/// at radius r when (1 - r) n >= factor (10 by default).
bool circle_rule_resolves(double r, int circle_nodes, double factor = 10.0) noexcept;

/// Smallest circle_nodes * 2^k that resolves radius r. Throws PolicyError
/// past kMaxCircleNodes.
inline constexpr int kMaxCircleNodes = 1 << 22;
int resolving_circle_size(double r, int circle_nodes, double factor = 10.0);

/// Refinement target of point evaluation, stricter than the refusal policy.
inline constexpr double kEvaluationFactor = 40.0;

struct FieldNode {
  double r = 0.0;
  double theta = 0.0;
  std::optional<Complex> value;
  std::optional<WirtingerPair> gradient;
  /// Non-empty exactly when the node is a hole.
  std::string error;
};

/// Polar lattice r_i = i / n_r (i < n_r), theta_j = 2 pi j / n_theta, stored
/// radius-major.
struct SolutionField {
  int n_r = 0;
  int n_theta = 0;
  bool with_gradient = false;
  std::string fingerprint;
  std::vector<FieldNode> nodes;

  const FieldNode& at(int i, int j) const { return nodes.at(static_cast<std::size_t>(i) * n_theta + j); }
  std::size_t holes() const;
};

struct GridOptions {
  bool with_gradient = false;
  /// Skip the near-boundary policy check.
  bool allow_under_resolved = false;
};

struct SolverOptions {
  /// Sign in front of G[g]. Only the default -1 solves the problem; +1 is
  /// kept for negative controls.
  double green_sign = -1.0;
};

/// Case data with its samples resampled onto the circle rule once.
class Solver {
 public:
  explicit Solver(Case data, QuadratureSizes sizes = {}, SolverOptions options = {});

  const Case& data() const noexcept { return data_; }
  const QuadratureSizes& sizes() const noexcept { return sizes_; }
  const Rules& rules() const noexcept { return rules_; }

  /// F0[f] + H0[h], with the same circle refinement as solve_point.
  Complex boundary_part(DiskPoint z) const;
  /// G[g], without the sign.
  Complex green_part(DiskPoint z) const;
  Complex value(DiskPoint z) const;

  WirtingerPair boundary_gradient(DiskPoint z) const;
  /// Gradient of G[g], without the sign.
  WirtingerPair green_gradient(DiskPoint z) const;
  WirtingerPair gradient(DiskPoint z) const;

  /// Evaluates every node of the polar lattice. Green potentials are computed
  /// once per radius and per angular frequency a - b of the source, using
  /// G[g](z e^{i t}) = e^{i k t} G[g](z) for a source of frequency k.
  /// Throws PolicyError when the outer radius violates the near-boundary
  /// policy, and ValidationError on n_r or n_theta below 2.
  SolutionField solve_grid(int n_r, int n_theta, const GridOptions& options = {}) const;

  /// FNV-1a digest of (f, h, g, quadrature sizes, green sign), 16 hex digits.
  std::string fingerprint() const;

 private:
  Case data_;
  QuadratureSizes sizes_;
  SolverOptions options_;
  Rules rules_;
  std::vector<Complex> f_nodes_;
  std::vector<Complex> h_nodes_;

  struct BoundaryResult {
    Complex value;
    WirtingerPair gradient;
  };
  BoundaryResult boundary_eval(Complex z, bool want_value, bool want_gradient) const;
};

SolutionField solve_grid(const Case& data, int n_r, int n_theta, const GridOptions& options = {},
                         const QuadratureSizes& sizes = {});

std::string case_fingerprint(const Case& data, const QuadratureSizes& sizes, double green_sign = -1.0);

}  // namespace biharmonic
