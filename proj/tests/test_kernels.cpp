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


#include "biharmonic/kernels.hpp"
#include "biharmonic/quadrature.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>

using namespace biharmonic;
using doctest::Approx;
using oracle::kPi;

namespace {

// Brute-force circle mean of |1 - z e^{it}|^{-2 beta} on n equal nodes.
double moment_by_quadrature(double beta, Complex z, int n = 4096) {
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += std::pow(std::norm(1.0 - z * std::polar(1.0, 2.0 * kPi * k / n)), -beta);
  }
  return sum / n;
}

}  // namespace

TEST_CASE("poisson kernel values") {
  CHECK(poisson_eval(DiskPoint(0.0, 0.0)) == Approx(1.0).epsilon(1e-15));
  CHECK(poisson_eval(DiskPoint(0.5, 0.0)) == Approx(3.0).epsilon(1e-15));
  CHECK(poisson_eval(DiskPoint(-0.5, 0.0)) == Approx(1.0 / 3.0).epsilon(1e-15));
  for (Complex z : oracle::random_points(50, 0.99)) CHECK(poisson_eval(DiskPoint(z)) > 0.0);
}

TEST_CASE("H0 values") {
  CHECK(h0_eval(DiskPoint(0.0, 0.0)) == Approx(0.5).epsilon(1e-15));
  CHECK(h0_eval(DiskPoint(0.5, 0.0)) == Approx(1.125).epsilon(1e-15));
  CHECK(h0_eval(DiskPoint(0.9, 0.0)) == Approx(1.805).epsilon(1e-14));
}

TEST_CASE("F0 values") {
  CHECK(f0_eval(DiskPoint(0.0, 0.0)) == Approx(1.0).epsilon(1e-15));
  CHECK(f0_eval(DiskPoint(0.5, 0.0)) == Approx(4.5).epsilon(1e-15));
  CHECK(f0_eval(DiskPoint(0.0, 0.5)) == Approx(0.36).epsilon(1e-15));
}

TEST_CASE("kernels refuse points on or near the circle") {
  CHECK_THROWS_AS(poisson_eval(DiskPoint(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(h0_eval(DiskPoint(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(f0_eval(DiskPoint(1.0 - 1e-13, 0.0)), DomainError);
  CHECK_THROWS_AS(h0_dz(DiskPoint(-1.0, 0.0), 0.3), DomainError);
  CHECK_THROWS_AS(f0_dz(DiskPoint(1.0, 0.0), 0.3), DomainError);
  CHECK_THROWS_AS(DiskPoint(1.1, 0.0), DomainError);
  CHECK_NOTHROW(f0_eval(DiskPoint(1.0 - 1e-11, 0.0)));
}

TEST_CASE("H0 and F0 are nonnegative") {
  for (Complex z : oracle::random_points(2000, 0.999, 11)) {
    CHECK(h0_eval(DiskPoint(z)) >= 0.0);
    CHECK(f0_eval(DiskPoint(z)) >= 0.0);
  }
}

TEST_CASE("H0 derivative values") {
  auto at = [](double x, double y, double t) { return h0_dz(DiskPoint(x, y), t).d_z; };
  CHECK(std::abs(at(0, 0, 0) - Complex(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(at(0.5, 0, 0) - Complex(0.75, 0.0)) < 1e-14);
  CHECK(std::abs(at(0, 0, kPi / 2) - Complex(0.0, -0.5)) < 1e-15);
}

TEST_CASE("F0 derivative values") {
  auto at = [](double t) { return f0_dz(DiskPoint(0.0, 0.0), t).d_z; };
  CHECK(std::abs(at(0.0) - Complex(1.5, 0.0)) < 1e-15);
  CHECK(std::abs(at(kPi) - Complex(-1.5, 0.0)) < 1e-14);
  for (double t : {0.3, 1.7, 4.0}) CHECK(std::abs(at(t)) == Approx(1.5).epsilon(1e-15));
}

TEST_CASE("kernel derivatives are conjugate pairs matching finite differences") {
  for (Complex z : oracle::random_points(40, 0.9, 3)) {
    for (double t : {0.0, 0.7, 2.9, 5.1}) {
      const Complex rot = std::polar(1.0, -t);
      const WirtingerPair h = h0_dz(DiskPoint(z), t);
      const WirtingerPair f = f0_dz(DiskPoint(z), t);
      CHECK(h.d_zbar == std::conj(h.d_z));
      CHECK(f.d_zbar == std::conj(f.d_z));
      const auto fd_h = oracle::wirtinger_fd([&](Complex w) { return Complex(h0_eval(DiskPoint(w * rot))); }, z);
      const auto fd_f = oracle::wirtinger_fd([&](Complex w) { return Complex(f0_eval(DiskPoint(w * rot))); }, z);
      CHECK(std::abs(h.d_z - fd_h.first) < 1e-6);
      CHECK(std::abs(f.d_z - fd_f.first) < 1e-6);
    }
  }
}

TEST_CASE("kernel moment values") {
  CHECK(kernel_moment(1.0, 0.5) == Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(kernel_moment(2.0, 0.5) == Approx(1.25 / (0.75 * 0.75 * 0.75)).epsilon(1e-15));
  CHECK(kernel_moment(3.0, 0.0) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("kernel moment domain") {
  CHECK_THROWS_AS(kernel_moment(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(kernel_moment(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(kernel_moment(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(kernel_moment(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(kernel_moment_series(2.5, 1.5), DomainError);
}

TEST_CASE("moment series agrees with the closed forms") {
  for (double beta : {1.0, 2.0}) {
    for (double r : {0.0, 0.25, 0.5, 0.75, 0.9}) {
      const double closed = kernel_moment(beta, r);
      CHECK(std::abs(kernel_moment_series(beta, r) - closed) <= 1e-12 * closed);
    }
  }
}

TEST_CASE("beta = 3 moment matches its squared-binomial coefficients") {
  // (Gamma(n+3) / (n! Gamma(3)))^2 = ((n+1)(n+2)/2)^2
  for (double r : {0.1, 0.5, 0.8}) {
    double sum = 0.0;
    for (int n = 0; n < 2000; ++n) {
      const double c = 0.5 * (n + 1.0) * (n + 2.0);
      sum += c * c * std::pow(r, 2 * n);
    }
    CHECK(kernel_moment(3.0, r) == Approx(sum).epsilon(1e-13));
  }
}

TEST_CASE("non-integer moments match brute-force circle quadrature") {
  for (double beta : {0.5, 1.5, 2.5}) {
    for (double r : {0.2, 0.6}) {
      CHECK(kernel_moment(beta, r) == Approx(moment_by_quadrature(beta, r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("moments do not depend on the argument of z") {
  for (double beta : {1.0, 1.5, 2.0}) {
    for (double r : {0.3, 0.7}) {
      const double on_axis = moment_by_quadrature(beta, r, 1024);
      const double rotated = moment_by_quadrature(beta, std::polar(r, kPi / 3.0), 1024);
      CHECK(std::abs(on_axis - rotated) <= 1e-12 * on_axis);
    }
  }
}

TEST_CASE("Hoelder bound for the 3/2 moment") {
  for (double r : {0.0, 0.3, 0.6, 0.9, 0.95}) {
    const double value = moment_by_quadrature(1.5, r, 8192);
    CHECK(value <= std::sqrt(1.0 + r * r) / ((1.0 - r * r) * (1.0 - r * r)));
    CHECK(value == Approx(kernel_moment(1.5, r)).epsilon(1e-10));
  }
}

TEST_CASE("polylog integral values") {
  CHECK(polylog_integral(0.0, 1.0, PolylogForm::plain) == Approx(1.0).epsilon(1e-15));
  CHECK(polylog_integral(1.0, 2.0, PolylogForm::plain) == Approx(0.25).epsilon(1e-15));
  CHECK(polylog_integral(1.0, 2.0, PolylogForm::radial) == Approx(0.125).epsilon(1e-15));
  CHECK_THROWS_AS(polylog_integral(-1.0, 2.0, PolylogForm::plain), DomainError);
  CHECK_THROWS_AS(polylog_integral(0.0, 0.5, PolylogForm::radial), DomainError);
}

TEST_CASE("polylog integrals match exp-sinh quadrature") {
  // t = e^{-s} (plain) and r = e^{-s} (radial) move the endpoint singularity to infinity
  boost::math::quadrature::exp_sinh<double> es;
  for (double a : {-0.5, 0.0, 1.0, 2.5}) {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double plain = es.integrate([&](double s) { return std::exp(-(a + 1.0) * s) * std::pow(s, p - 1.0); });
      const double radial =
          es.integrate([&](double s) { return std::exp(-(2.0 * a + 2.0) * s) * std::pow(2.0 * s, p - 1.0); });
      CHECK(polylog_integral(a, p, PolylogForm::plain) == Approx(plain).epsilon(1e-10));
      CHECK(polylog_integral(a, p, PolylogForm::radial) == Approx(radial).epsilon(1e-10));
    }
  }
}

TEST_CASE("gamma values used by the polylog integral") {
  // Gamma(1/2) = sqrt(pi), Gamma(5/2) = 3 sqrt(pi) / 4 at a = 0
  CHECK(polylog_integral(0.0, 0.5 + 1.0, PolylogForm::plain) == Approx(0.5 * std::sqrt(kPi)).epsilon(1e-13));
  CHECK(polylog_integral(0.0, 2.5, PolylogForm::plain) == Approx(0.75 * std::sqrt(kPi)).epsilon(1e-13));
  CHECK(polylog_integral(0.0, 6.0, PolylogForm::plain) == Approx(120.0).epsilon(1e-13));
}
