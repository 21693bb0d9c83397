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


#include "biharmonic/green.hpp"
#include "biharmonic/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace biharmonic;
using doctest::Approx;

namespace {

const CheckResult& find(const std::vector<CheckResult>& checks, const std::string& name) {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  REQUIRE_MESSAGE(it != checks.end(), "missing check " << name);
  return *it;
}

// (1 - z zbar)^2 = 1 - 2 z zbar + z^2 zbar^2
SourceTerm one_minus_r2_squared() { return SourceTerm({{0, 0, 1.0}, {1, 1, -2.0}, {2, 2, 1.0}}); }
SourceTerm one_minus_r4() { return SourceTerm({{0, 0, 1.0}, {2, 2, -1.0}}); }
SourceTerm r4() { return SourceTerm({{2, 2, 1.0}}); }

bool is_constant(const BoundaryData& b, Complex value, double tol = 1e-14) {
  return std::all_of(b.samples().begin(), b.samples().end(), [&](Complex s) { return std::abs(s - value) <= tol; });
}

bool source_equals(const SourceTerm& s, Complex value) {
  for (Complex z : oracle::random_points(10, 1.0, 3))
    if (std::abs(s(z) - value) > 1e-13) return false;
  return true;
}

FdOptions sparse_centres() {
  FdOptions o;
  o.center_spacing = 0.4;
  return o;
}

}  // namespace

TEST_CASE("check semantics") {
  const CheckResult eq = equality_check("e", 1.0, 1.0 + 1e-9, 1e-8);
  CHECK(eq.passed);
  CHECK(eq.margin() == Approx(1e-8 - 1e-9));
  CHECK_FALSE(equality_check("e", 1.0, 1.1, 1e-3).passed);
  CHECK(upper_bound_check("u", 0.75, 0.75, 0.0).passed);
  CHECK_FALSE(upper_bound_check("u", 0.76, 0.75, 1e-6).passed);
  CHECK(upper_bound_check("u", 0.5, 0.75, 1e-6).margin() == Approx(0.25 + 1e-6));
  CHECK(lower_bound_check("l", 1.0, 1.5, 0.6).passed);
  CHECK_FALSE(lower_bound_check("l", 1.0, 1.5, 0.1).passed);
  CHECK(upper_bound_check("u", 2.0, 1.0, 0.0).margin() < 0.0);
  CHECK(all_passed({eq, upper_bound_check("u", 0.0, 1.0, 0.0)}));
  CHECK_FALSE(all_passed({eq, upper_bound_check("u", 2.0, 1.0, 0.0)}));
}

TEST_CASE("manufactured data") {
  const ManufacturedCase a = manufactured_case(one_minus_r2_squared());
  CHECK(source_equals(a.data.g, 4.0));
  CHECK(is_constant(a.data.f, 0.0));
  CHECK(is_constant(a.data.h, 0.0));

  const ManufacturedCase b = manufactured_case(one_minus_r4());
  CHECK(source_equals(b.data.g, -4.0));
  CHECK(is_constant(b.data.f, 0.0));
  CHECK(is_constant(b.data.h, 4.0));

  const ManufacturedCase c = manufactured_case(r4());
  CHECK(source_equals(c.data.g, 4.0));
  CHECK(is_constant(c.data.f, 1.0));
  CHECK(is_constant(c.data.h, -4.0));

  // z^3 zbar: f = e^{2it}, h = -4 e^{2it}, g = 0
  const ManufacturedCase d = manufactured_case(SourceTerm({{3, 1, 1.0}}));
  CHECK(source_equals(d.data.g, 0.0));
  for (double t : {0.2, 1.9}) {
    CHECK(std::abs(d.data.f(t) - std::polar(1.0, 2.0 * t)) < 1e-13);
    CHECK(std::abs(d.data.h(t) + 4.0 * std::polar(1.0, 2.0 * t)) < 1e-13);
  }
  CHECK_THROWS_AS(manufactured_case(SourceTerm({{17, 0, 1.0}})), ValidationError);
}

TEST_CASE("manufactured normal data matches a radial difference of the solution") {
  const SourceTerm phi({{4, 1, {1.0, 0.5}}, {0, 3, 2.0}, {2, 2, -1.0}});
  const ManufacturedCase mc = manufactured_case(phi);
  for (double t : {0.0, 0.8, 3.3}) {
    const double h = 1e-6;
    const Complex inward = -(phi(std::polar(1.0 + h, t)) - phi(std::polar(1.0 - h, t))) / (2.0 * h);
    CHECK(std::abs(mc.data.h(t) - inward) < 1e-7);
    CHECK(std::abs(mc.data.f(t) - phi(std::polar(1.0, t))) < 1e-13);
  }
}

TEST_CASE("sample points") {
  const auto pts = sample_points();
  REQUIRE(pts.size() == 5);
  CHECK(pts[2].modulus() == Approx(0.5));
  CHECK(std::arg(pts[2].value()) == Approx(oracle::kPi / 4.0));
  CHECK(pts[4].value() == Complex(0.9, 0.0));
}

TEST_CASE("identity suite") {
  const auto checks = identity_suite();
  CHECK(checks.size() == 55);
  for (const CheckResult& c : checks) CHECK_MESSAGE(c.passed, c.name);
  const CheckResult& mean = find(checks, "f0_mean z=0.75+0i");
  CHECK(std::abs(mean.computed - 1.0) <= 1e-10);
  const CheckResult& i_half = find(checks, "I z=0.3536+0.3536i");
  CHECK(std::abs(i_half.computed - 0.234375) <= 1e-8);
  const CheckResult& rep = find(checks, "green_representation z=0+0i");
  CHECK(std::abs(rep.computed - 1.0) <= 1e-8);
}

TEST_CASE("identity suite negative controls") {
  SuiteOptions perturbed;
  perturbed.f0_perturbation = 0.01;
  const auto checks = identity_suite(perturbed);
  CHECK_FALSE(find(checks, "f0_mean z=0+0i").passed);
  CHECK_FALSE(all_passed(checks));

  SuiteOptions exact;
  exact.tolerance = 0.0;
  CHECK_FALSE(all_passed(identity_suite(exact)));
}

TEST_CASE("bound suite") {
  const auto checks = bound_suite();
  for (const CheckResult& c : checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(find(checks, "J3_exact z=0.3536+0.3536i").computed.real() == Approx(0.25).epsilon(1e-10));
  CHECK(find(checks, "int|G| z=0.3536+0.3536i").margin() > 0.0);
}

TEST_CASE("Green bounds at z = 0.5") {
  const DiskRule rule = DiskRule::centered(DiskPoint(0.5, 0.0));
  const double g = rule.integrate([](Complex c) { return Complex(std::abs(detail::g(0.5, c))); }).real();
  const double gz = rule.integrate([](Complex c) { return Complex(std::abs(detail::g_dz(0.5, c))); }).real();
  CHECK(g <= 0.75);
  CHECK(gz <= 23.0 / 6.0);
  // G <= 0 and -G[1](z) = (1 - |z|^2)^2 / 4
  CHECK(g == Approx(0.5625 / 4.0).epsilon(1e-10));
}

TEST_CASE("finite-difference residual") {
  const FdResidual quartic = fd_bilaplacian_residual(oracle::make_case(0.0, 0.0, 4.0), 0.02, sparse_centres());
  CHECK(quartic.check.passed);
  CHECK(quartic.max_residual <= 1e-6);
  CHECK(quartic.centers > 0);

  const FdResidual zero = fd_bilaplacian_residual(Case{}, 0.02, sparse_centres());
  CHECK(zero.max_residual == 0.0);

  const FdResidual r4case = fd_bilaplacian_residual(oracle::make_case(1.0, -4.0, 4.0), 0.02, sparse_centres());
  CHECK(r4case.max_residual <= 1e-6);

  CHECK_THROWS_AS(fd_bilaplacian_residual(Case{}, 0.06), DomainError);
  FdOptions tiny;
  tiny.support_radius = 0.05;
  CHECK_THROWS_AS(fd_bilaplacian_residual(Case{}, 0.05, tiny), DomainError);
}

TEST_CASE("finite-difference residual detects a flipped Green sign") {
  const Solver flipped(oracle::make_case(0.0, 0.0, 4.0), {}, SolverOptions{+1.0});
  // the field is -(1 - |z|^2)^2 with bilaplacian -4
  CHECK(fd_bilaplacian_residual(flipped, 0.02, sparse_centres()).max_residual == Approx(8.0).epsilon(1e-4));
}

TEST_CASE("observed order") {
  CHECK(observed_order(4e-4, 1e-4) == Approx(2.0));
  CHECK(observed_order(1.0, 1.0) == Approx(0.0));
}

TEST_CASE("boundary traces") {
  const auto radial = boundary_trace_check(oracle::make_case(0.0, 1.0, 0.0), {0.99});
  CHECK(all_passed(radial));
  const Solver radial_solver(oracle::make_case(0.0, 1.0, 0.0), QuadratureSizes{4096});
  CHECK(std::abs(radial_solver.value(DiskPoint(0.99, 0.0)) - 0.5 * (1.0 - 0.99 * 0.99)) <= 1e-8);

  const Solver constant(oracle::make_case(1.0, 0.0, 0.0), QuadratureSizes{4096});
  for (double t : {0.0, 2.0, 4.0}) CHECK(std::abs(constant.value(DiskPoint::polar(0.99, t)) - 1.0) <= 1e-8);

  const ManufacturedCase mc = manufactured_case(one_minus_r4());
  const auto traces = boundary_trace_check(mc, {0.98, 0.99});
  for (const CheckResult& c : traces) CHECK_MESSAGE(c.passed, c.name);
  const Solver s(mc.data, QuadratureSizes{4096});
  for (double t : {0.5, 3.0}) {
    const Complex slope = (s.value(DiskPoint::polar(0.99, t)) - s.value(DiskPoint::polar(0.98, t))) / 0.01;
    CHECK(slope.real() == Approx(-4.0).epsilon(0.05));
  }

  const Solver coarse(oracle::make_case(1.0, 0.0, 0.0));
  CHECK_THROWS_AS(boundary_trace_check(coarse, {0.99}), PolicyError);
}

TEST_CASE("gradient cross-check") {
  const Solver green(oracle::make_case(0.0, 0.0, 4.0));
  const auto g = gradient_crosscheck(green, {DiskPoint(0.3, 0.2)}, 1e-5, 1e-7);
  for (const CheckResult& c : g) CHECK_MESSAGE(c.passed, c.name);

  const Solver radial(oracle::make_case(0.0, 1.0, 0.0));
  CHECK(std::abs(radial.gradient(DiskPoint(0.5, 0.0)).d_z + 0.25) < 1e-10);
  CHECK(all_passed(gradient_crosscheck(radial, {DiskPoint(0.5, 0.0)})));

  const auto zero = gradient_crosscheck(Solver(Case{}), {DiskPoint(0.1, 0.1)});
  for (const CheckResult& c : zero) {
    CHECK(c.computed == Complex(0.0));
    CHECK(c.expected == Complex(0.0));
  }
  CHECK_THROWS_AS(gradient_crosscheck(radial, {DiskPoint(0.95, 0.0)}), DomainError);
}

TEST_CASE("solution error") {
  for (const SourceTerm& phi : {one_minus_r2_squared(), one_minus_r4(), SourceTerm::constant(1.0)}) {
    const ManufacturedCase mc = manufactured_case(phi);
    const SolutionField field = solve_grid(mc.data, 10, 16);
    const CheckResult r = solution_error(mc, field);
    CHECK_MESSAGE(r.passed, r.name);
    CHECK(r.computed.real() <= (phi == SourceTerm::constant(1.0) ? 1e-10 : 1e-8));
  }
  const ManufacturedCase a = manufactured_case(r4());
  const SolutionField other = solve_grid(manufactured_case(one_minus_r4()).data, 4, 4);
  CHECK_THROWS_AS(solution_error(a, other), ValidationError);
}

TEST_CASE("solution error catches a flipped Green sign") {
  const ManufacturedCase mc = manufactured_case(one_minus_r2_squared());
  const SolverOptions flipped{+1.0};
  const SolutionField field = Solver(mc.data, {}, flipped).solve_grid(10, 16);
  const CheckResult r = solution_error(mc, field, 1e-8, {}, flipped);
  CHECK_FALSE(r.passed);
  // the flipped field is -(1 - |z|^2)^2, so the error at the origin is 2
  CHECK(r.computed.real() == Approx(2.0).epsilon(1e-8));
}
