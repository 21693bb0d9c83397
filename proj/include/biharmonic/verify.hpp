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


// Machine checks: the exact integral identities and the inequalities for the
// kernels and the Green function, manufactured polynomial solutions, a
// finite-difference residual of the biharmonic equation, boundary traces and
// a finite-difference cross-check of the gradient.

#pragma once

#include "biharmonic/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace biharmonic {

enum class CheckKind {
  equality,     // |computed - expected| <= tolerance
  upper_bound,  // computed <= expected + tolerance
  lower_bound,  // computed >= expected - tolerance
};

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::equality;
  Complex computed{};
  Complex expected{};
  double tolerance = 0.0;
  bool passed = false;
  std::string note;

  /// Slack left before the check fails; negative for failed checks.
  double margin() const;
};

CheckResult equality_check(std::string name, Complex computed, Complex expected, double tolerance);
CheckResult upper_bound_check(std::string name, double computed, double bound, double tolerance);
CheckResult lower_bound_check(std::string name, double computed, double bound, double tolerance);

bool all_passed(const std::vector<CheckResult>& checks);

/// A monomial solution Phi* with the data that it solves:
/// g = Delta^2 Phi*, f = Phi* on the circle, h = -dPhi*/dr on the circle.
struct ManufacturedCase {
  SourceTerm phi_star;
  Case data;

  Complex exact(Complex z) const { return phi_star(z); }
};

/// Uses z^a zbar^b -> e^{i(a-b)t} on the circle and -d/dr -> -(a+b) e^{i(a-b)t}.
ManufacturedCase manufactured_case(const SourceTerm& phi_star, int n_samples = 0);

/// The evaluation points 0, 0.25, 0.5 e^{i pi/4}, 0.75, 0.9.
std::vector<DiskPoint> sample_points();

struct SuiteOptions {
  QuadratureSizes sizes{};
  /// Replaces every per-check tolerance when set.
  std::optional<double> tolerance;
  /// Added to F0 inside the kernel-mean check (negative controls only).
  double f0_perturbation = 0.0;
};

/// Kernel means, moment identities, polylog integrals and the Green
/// representation identities at the sample points.
std::vector<CheckResult> identity_suite(const SuiteOptions& options = {});

/// Integral bounds for G, G_z, their pieces J1, J2, J3, the z-variable
/// integral of |G_z|, the integrability bounds of H2 and H3 and the Hoelder
/// bounds on circle moments.
std::vector<CheckResult> bound_suite(const SuiteOptions& options = {});

struct FdOptions {
  double center_spacing = 0.2;
  double support_radius = 0.85;
  double tolerance = 1e-6;
};

struct FdResidual {
  double max_residual = 0.0;
  int centers = 0;
  CheckResult check;
};

/// Applies the 13-point stencil of the iterated 5-point Laplacian, divided
/// by 16 h^4, at lattice centres spaced `center_spacing` apart whose stencil
/// stays inside |z| <= support_radius, and compares with g. Throws
/// DomainError for h > 0.05 or when no centre fits.
FdResidual fd_bilaplacian_residual(const Solver& solver, double h, const FdOptions& options = {});
FdResidual fd_bilaplacian_residual(const Case& data, double h, const FdOptions& options = {});

/// log2(coarse / fine) for residuals at spacings h and h / 2.
double observed_order(double coarse_residual, double fine_residual);

struct TraceOptions {
  int n_theta = 16;
  /// Trace tolerance is trace_scale * (1 - r), normal-derivative tolerance
  /// normal_scale * (1 - r1). Non-positive values select P and 2P, with P
  /// the Lipschitz bound of the data.
  double trace_scale = 0.0;
  double normal_scale = 0.0;
};

/// |Phi(r e^{it}) - f(t)| per radius and, for consecutive radii r1 < r2,
/// |-(Phi(r2 e^{it}) - Phi(r1 e^{it})) / (r2 - r1) - h(t)|. Throws
/// PolicyError if the solver's circle rule does not resolve a radius.
std::vector<CheckResult> boundary_trace_check(const Solver& solver, const std::vector<double>& radii,
                                              const TraceOptions& options = {});

/// Same on `sizes` with the circle rule raised to
/// resolving_circle_size(r_max, circle_nodes, 40) nodes, fine enough for the
/// 1e-8 comparisons of the manufactured overload.
std::vector<CheckResult> boundary_trace_check(const Case& data, const std::vector<double>& radii,
                                              const TraceOptions& options = {}, const QuadratureSizes& sizes = {});

/// Adds a comparison with the exact solution (tolerance 1e-8) per radius.
std::vector<CheckResult> boundary_trace_check(const ManufacturedCase& mc, const std::vector<double>& radii,
                                              const TraceOptions& options = {}, const QuadratureSizes& sizes = {});

/// gradient versus central differences of the value, per point and
/// component. Throws DomainError for |z| > 0.9.
std::vector<CheckResult> gradient_crosscheck(const Solver& solver, const std::vector<DiskPoint>& points,
                                             double step = 1e-5, double tolerance = 1e-6);

/// Largest |Phi - Phi*| over the nodes with r <= 0.9. Throws ValidationError
/// when the field fingerprint does not match (mc.data, sizes, options).
CheckResult solution_error(const ManufacturedCase& mc, const SolutionField& field, double tolerance = 1e-8,
                           const QuadratureSizes& sizes = {}, const SolverOptions& options = {});

}  // namespace biharmonic
