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


#include "biharmonic/verify.hpp"

#include "biharmonic/green.hpp"
#include "biharmonic/kernels.hpp"
#include "biharmonic/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>

namespace biharmonic {

double CheckResult::margin() const {
  switch (kind) {
    case CheckKind::equality:
      return tolerance - std::abs(computed - expected);
    case CheckKind::upper_bound:
      return expected.real() + tolerance - computed.real();
    case CheckKind::lower_bound:
      return computed.real() - (expected.real() - tolerance);
  }
  return 0.0;
}

namespace {

CheckResult make_check(std::string name, CheckKind kind, Complex computed, Complex expected, double tolerance) {
  CheckResult c{std::move(name), kind, computed, expected, tolerance, false, {}};
  const double m = c.margin();
  c.passed = std::isfinite(computed.real()) && std::isfinite(computed.imag()) && m >= 0.0;
  return c;
}

std::string label(DiskPoint z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g%+.4gi", z.re(), z.im());
  return buf;
}

std::string label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

double log_ratio(Complex z, Complex zeta) {
  return std::log(std::norm(1.0 - std::conj(zeta) * z)) - std::log(std::norm(z - zeta));
}

// Circle mean of |1 - r e^{it}|^{-2 beta}.
double moment_by_quadrature(const CircleRule& rule, double beta, double r) {
  return rule
      .integrate([&](double t) { return Complex(std::pow(std::norm(1.0 - std::polar(r, t)), -beta)); })
      .real();
}

struct Tolerances {
  std::optional<double> shared;
  double operator()(double own) const { return shared.value_or(own); }
};

}  // namespace

CheckResult equality_check(std::string name, Complex computed, Complex expected, double tolerance) {
  return make_check(std::move(name), CheckKind::equality, computed, expected, tolerance);
}

CheckResult upper_bound_check(std::string name, double computed, double bound, double tolerance) {
  return make_check(std::move(name), CheckKind::upper_bound, computed, bound, tolerance);
}

CheckResult lower_bound_check(std::string name, double computed, double bound, double tolerance) {
  return make_check(std::move(name), CheckKind::lower_bound, computed, bound, tolerance);
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ManufacturedCase manufactured_case(const SourceTerm& phi_star, int n_samples) {
  std::vector<FourierMode> trace;
  std::vector<FourierMode> normal;
  for (const auto& t : phi_star.terms()) {
    trace.push_back({t.a - t.b, t.c});
    normal.push_back({t.a - t.b, -static_cast<double>(t.a + t.b) * t.c});
  }
  return {phi_star,
          {BoundaryData::from_fourier(trace, n_samples), BoundaryData::from_fourier(normal, n_samples),
           phi_star.bilaplacian()}};
}

std::vector<DiskPoint> sample_points() {
  return {DiskPoint(0.0, 0.0), DiskPoint(0.25, 0.0), DiskPoint::polar(0.5, std::numbers::pi / 4),
          DiskPoint(0.75, 0.0), DiskPoint(0.9, 0.0)};
}

std::vector<CheckResult> identity_suite(const SuiteOptions& options) {
  const Tolerances tol{options.tolerance};
  const CircleRule circle(options.sizes.circle_nodes);
  const Rules rules(options.sizes);
  std::vector<CheckResult> out;

  for (const DiskPoint& p : sample_points()) {
    const Complex z = p.value();
    const Complex f0_mean = circle.integrate(
        [&](double t) { return Complex(detail::f0(z * std::polar(1.0, -t)) + options.f0_perturbation); });
    out.push_back(equality_check("f0_mean z=" + label(p), f0_mean, 1.0, tol(1e-10)));
    const Complex h0_mean = circle.integrate([&](double t) { return Complex(detail::h0(z * std::polar(1.0, -t))); });
    out.push_back(equality_check("h0_mean z=" + label(p), h0_mean, 0.5 * (1.0 - p.norm()), tol(1e-10)));
  }

  for (double r : {0.0, 0.25, 0.5, 0.75, 0.9}) {
    for (double beta : {1.0, 2.0}) {
      const std::string tag = "beta=" + label(beta) + " r=" + label(r);
      const double closed = kernel_moment(beta, r);
      out.push_back(equality_check("moment_series " + tag, kernel_moment_series(beta, r), closed, tol(1e-10)));
      out.push_back(equality_check("moment_quadrature " + tag, moment_by_quadrature(circle, beta, r), closed,
                                   tol(1e-10)));
    }
    // beta = 3 has no closed form; series against quadrature.
    const double series3 = kernel_moment(3.0, r);
    out.push_back(equality_check("moment_quadrature beta=3 r=" + label(r), moment_by_quadrature(circle, 3.0, r),
                                 series3, tol(1e-10 * std::max(1.0, series3))));
  }

  const RadialRule& radial = rules.disk.radial();
  for (auto [a, p] : {std::pair{0.0, 1.0}, {1.0, 2.0}, {0.0, 2.0}, {0.5, 3.0}, {2.0, 3.0}}) {
    double sum = 0.0;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
      const double r = radial.nodes[i];
      sum += radial.weights[i] * std::pow(r, 2.0 * a) * std::pow(std::log(1.0 / (r * r)), p - 1.0);
    }
    out.push_back(equality_check("polylog a=" + label(a) + " p=" + label(p), sum,
                                 polylog_integral(a, p, PolylogForm::plain), tol(1e-10)));
  }

  for (const DiskPoint& p : sample_points()) {
    const Complex z = p.value();
    const DiskRule centered = rules.disk.recentered(p);
    const Complex green_rep = centered.integrate([&](Complex zeta) { return Complex(log_ratio(z, zeta)); });
    out.push_back(equality_check("green_representation z=" + label(p), green_rep, 1.0 - p.norm(), tol(1e-8)));
    const Complex i_value =
        centered.integrate([&](Complex zeta) { return Complex(std::norm(z - zeta) * log_ratio(z, zeta)); });
    out.push_back(equality_check("I z=" + label(p), i_value, 0.25 * (1.0 - p.norm() * p.norm()), tol(1e-8)));
    // J4: the same kernel integrated over the first variable with zeta = p.
    const Complex j4 =
        centered.integrate([&](Complex w) { return Complex(std::norm(w - z) * log_ratio(w, z)); });
    out.push_back(equality_check("J4 zeta=" + label(p), j4, 0.25 * (1.0 - p.norm() * p.norm()), tol(1e-8)));
  }
  return out;
}

std::vector<CheckResult> bound_suite(const SuiteOptions& options) {
  const Tolerances tol{options.tolerance};
  const Rules rules(options.sizes);
  const CircleRule circle(options.sizes.circle_nodes);
  std::vector<CheckResult> out;

  for (const DiskPoint& p : sample_points()) {
    const Complex z = p.value();
    const std::string at = " z=" + label(p);
    const DiskRule centered = rules.disk.recentered(p);
    auto integral = [&](auto&& fn) { return centered.integrate([&](Complex zeta) { return Complex(fn(zeta)); }).real(); };

    out.push_back(upper_bound_check("int|G|" + at, integral([&](Complex c) { return std::abs(detail::g(z, c)); }),
                                    0.75, tol(1e-6)));
    out.push_back(upper_bound_check(
        "int|G_z|" + at, integral([&](Complex c) { return std::abs(detail::g_dz(z, c)); }), 23.0 / 6.0, tol(1e-6)));
    out.push_back(upper_bound_check(
        "J1" + at, integral([&](Complex c) { return std::abs(z - c) * log_ratio(z, c); }), 0.5, tol(1e-6)));
    out.push_back(upper_bound_check("J2" + at, integral([&](Complex c) {
                                      return (1.0 - std::norm(c)) * std::abs(z - c) / std::abs(1.0 - std::conj(c) * z);
                                    }),
                                    17.0 / 6.0, tol(1e-6)));
    const double j3 = integral([&](Complex c) { return std::abs(z) * (1.0 - std::norm(c)); });
    out.push_back(upper_bound_check("J3" + at, j3, 0.5, tol(1e-6)));
    out.push_back(equality_check("J3_exact" + at, j3, 0.5 * p.modulus(), tol(1e-10)));

    // Integrals over the first variable with the second fixed at p.
    out.push_back(upper_bound_check("int|G_z|dA(z) zeta=" + label(p),
                                    integral([&](Complex w) { return std::abs(detail::g_dz(w, z)); }), 2.5, tol(1e-6)));
    out.push_back(upper_bound_check("int|w-zeta|log dA(w) zeta=" + label(p),
                                    integral([&](Complex w) { return std::abs(w - z) * log_ratio(w, z); }), 0.5,
                                    tol(1e-6)));

    // |H2| <= log_ratio + the nonnegative rational term, whose zeta-integral
    // is exactly 1/2, and the log_ratio integral is 1 - |z|^2.
    out.push_back(upper_bound_check("int|H2|" + at, integral([&](Complex c) {
                                      return std::abs(h2_eval(p, DiskPoint(c)));
                                    }),
                                    1.5 - p.norm(), tol(1e-6)));
    const double h3_first = integral([&](Complex c) {
      return (1.0 - std::norm(c)) / (std::abs(z - c) * std::abs(1.0 - std::conj(c) * z));
    });
    const double h3_second =
        integral([&](Complex c) { return (1.0 - std::norm(c)) / std::norm(1.0 - std::conj(c) * z); });
    out.push_back(upper_bound_check("H3_pole_term" + at, h3_first, 4.0 / 3.0, tol(1e-6)));
    out.push_back(upper_bound_check("H3_smooth_term" + at, h3_second, 1.0, tol(1e-6)));
    out.push_back(upper_bound_check("int|H3|" + at, integral([&](Complex c) {
                                      return std::abs(h3_eval(p, DiskPoint(c)));
                                    }),
                                    7.0 / 3.0, tol(1e-6)));
  }

  for (double r : {0.0, 0.25, 0.5, 0.75, 0.9}) {
    const std::string at = " r=" + label(r);
    const double m1 = kernel_moment(1.0, r);
    const double m2 = kernel_moment(2.0, r);
    const double m3 = kernel_moment(3.0, r);
    out.push_back(upper_bound_check("hoelder_3" + at, moment_by_quadrature(circle, 1.5, r), std::sqrt(m1 * m2),
                                    tol(1e-6)));
    out.push_back(upper_bound_check("hoelder_5" + at, moment_by_quadrature(circle, 2.5, r), std::sqrt(m2 * m3),
                                    tol(1e-6)));
    out.push_back(upper_bound_check("hoelder_5_series" + at, std::sqrt(m2 * m3), m3, tol(1e-6)));
  }
  return out;
}

FdResidual fd_bilaplacian_residual(const Solver& solver, double h, const FdOptions& options) {
  if (!(h > 0.0 && h <= 0.05)) throw DomainError("fd_bilaplacian_residual: spacing must lie in (0, 0.05]");
  const double reach = options.support_radius - 2.0 * h;
  const int span = static_cast<int>(std::floor(reach / options.center_spacing));
  FdResidual out;
  for (int i = -span; i <= span; ++i) {
    for (int j = -span; j <= span; ++j) {
      const Complex c(i * options.center_spacing, j * options.center_spacing);
      if (std::abs(c) > reach) continue;
      auto u = [&](int dx, int dy) { return solver.value(DiskPoint(c + Complex(dx * h, dy * h))); };
      const Complex stencil = 20.0 * u(0, 0) - 8.0 * (u(1, 0) + u(-1, 0) + u(0, 1) + u(0, -1)) +
                              2.0 * (u(1, 1) + u(1, -1) + u(-1, 1) + u(-1, -1)) +
                              (u(2, 0) + u(-2, 0) + u(0, 2) + u(0, -2));
      const Complex bilaplacian = stencil / (16.0 * h * h * h * h);
      out.max_residual = std::max(out.max_residual, std::abs(bilaplacian - solver.data().g(c)));
      ++out.centers;
    }
  }
  if (out.centers == 0) throw DomainError("fd_bilaplacian_residual: no stencil fits inside the support radius");
  out.check = upper_bound_check("fd_residual h=" + label(h), out.max_residual, 0.0, options.tolerance);
  out.check.note = std::to_string(out.centers) + " centres";
  return out;
}

FdResidual fd_bilaplacian_residual(const Case& data, double h, const FdOptions& options) {
  return fd_bilaplacian_residual(Solver(data), h, options);
}

double observed_order(double coarse_residual, double fine_residual) {
  return std::log2(coarse_residual / fine_residual);
}

std::vector<CheckResult> boundary_trace_check(const Solver& solver, const std::vector<double>& radii,
                                              const TraceOptions& options) {
  const Case& data = solver.data();
  const int n = solver.sizes().circle_nodes;
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("boundary_trace_check: radii must lie in (0, 1)");
    if (!circle_rule_resolves(r, n)) {
      throw PolicyError("boundary_trace_check: " + std::to_string(n) + " circle nodes do not resolve r = " +
                        std::to_string(r));
    }
  }
  std::vector<double> sorted(radii);
  std::sort(sorted.begin(), sorted.end());

  const double p = p_bound(estimate_boundary_lipschitz(data.f), data.h.sup_norm(), data.g.sup_bound());
  const double trace_scale = options.trace_scale > 0.0 ? options.trace_scale : p;
  const double normal_scale = options.normal_scale > 0.0 ? options.normal_scale : 2.0 * p;

  std::vector<double> thetas(options.n_theta);
  for (int j = 0; j < options.n_theta; ++j) thetas[j] = 2.0 * std::numbers::pi * (j + 0.5) / options.n_theta;
  std::map<double, std::vector<Complex>> values;
  for (double r : sorted) {
    auto& row = values[r];
    for (double t : thetas) row.push_back(solver.value(DiskPoint::polar(r, t)));
  }

  std::vector<CheckResult> out;
  for (double r : sorted) {
    double worst = 0.0;
    for (int j = 0; j < options.n_theta; ++j) worst = std::max(worst, std::abs(values[r][j] - data.f(thetas[j])));
    out.push_back(upper_bound_check("trace r=" + label(r), worst, 0.0, trace_scale * (1.0 - r)));
  }
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    const double r1 = sorted[k];
    const double r2 = sorted[k + 1];
    double worst = 0.0;
    for (int j = 0; j < options.n_theta; ++j) {
      const Complex inward = -(values[r2][j] - values[r1][j]) / (r2 - r1);
      worst = std::max(worst, std::abs(inward - data.h(thetas[j])));
    }
    out.push_back(upper_bound_check("normal r=" + label(r1) + ".." + label(r2), worst, 0.0,
                                    normal_scale * (1.0 - r1)));
  }
  return out;
}

namespace {

Solver trace_solver(const Case& data, const std::vector<double>& radii, QuadratureSizes sizes) {
  double r_max = 0.0;
  for (double r : radii) r_max = std::max(r_max, r);
  sizes.circle_nodes = resolving_circle_size(r_max, sizes.circle_nodes, 40.0);
  return Solver(data, sizes);
}

}  // namespace

std::vector<CheckResult> boundary_trace_check(const Case& data, const std::vector<double>& radii,
                                              const TraceOptions& options, const QuadratureSizes& sizes) {
  return boundary_trace_check(trace_solver(data, radii, sizes), radii, options);
}

std::vector<CheckResult> boundary_trace_check(const ManufacturedCase& mc, const std::vector<double>& radii,
                                              const TraceOptions& options, const QuadratureSizes& sizes) {
  const Solver solver = trace_solver(mc.data, radii, sizes);
  std::vector<CheckResult> out = boundary_trace_check(solver, radii, options);
  for (double r : radii) {
    double worst = 0.0;
    for (int j = 0; j < options.n_theta; ++j) {
      const DiskPoint z = DiskPoint::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / options.n_theta);
      worst = std::max(worst, std::abs(solver.value(z) - mc.exact(z.value())));
    }
    out.push_back(upper_bound_check("exact r=" + label(r), worst, 0.0, 1e-8));
  }
  return out;
}

std::vector<CheckResult> gradient_crosscheck(const Solver& solver, const std::vector<DiskPoint>& points,
                                             double step, double tolerance) {
  std::vector<CheckResult> out;
  for (const DiskPoint& p : points) {
    if (p.modulus() > 0.9) throw DomainError("gradient_crosscheck: points must satisfy |z| <= 0.9");
    const Complex z = p.value();
    const Complex dx = (solver.value(DiskPoint(z + step)) - solver.value(DiskPoint(z - step))) / (2.0 * step);
    const Complex dy = (solver.value(DiskPoint(z + Complex(0.0, step))) -
                        solver.value(DiskPoint(z - Complex(0.0, step)))) /
                       (2.0 * step);
    const Complex fd_z = 0.5 * (dx - Complex(0.0, 1.0) * dy);
    const Complex fd_zbar = 0.5 * (dx + Complex(0.0, 1.0) * dy);
    const WirtingerPair grad = solver.gradient(p);
    out.push_back(equality_check("d_z z=" + label(p), grad.d_z, fd_z, tolerance));
    out.push_back(equality_check("d_zbar z=" + label(p), grad.d_zbar, fd_zbar, tolerance));
  }
  return out;
}

CheckResult solution_error(const ManufacturedCase& mc, const SolutionField& field, double tolerance,
                           const QuadratureSizes& sizes, const SolverOptions& options) {
  if (field.fingerprint != case_fingerprint(mc.data, sizes, options.green_sign)) {
    throw ValidationError("solution_error: field fingerprint " + field.fingerprint +
                          " does not match the manufactured case");
  }
  double worst = 0.0;
  std::size_t holes = 0;
  for (const FieldNode& node : field.nodes) {
    if (node.r > 0.9 + 1e-12) continue;
    if (!node.value) {
      ++holes;
      continue;
    }
    worst = std::max(worst, std::abs(*node.value - mc.exact(std::polar(node.r, node.theta))));
  }
  if (holes > 0) worst = std::numeric_limits<double>::infinity();
  CheckResult c = upper_bound_check("solution_error", worst, 0.0, tolerance);
  if (holes > 0) c.note = std::to_string(holes) + " holes";
  return c;
}

}  // namespace biharmonic
