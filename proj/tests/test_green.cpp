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
#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

using namespace biharmonic;
using doctest::Approx;

namespace {

double g_of(Complex z, Complex zeta) { return g_eval(DiskPoint(z), DiskPoint(zeta)); }

}  // namespace

TEST_CASE("G values") {
  CHECK(g_of(0.0, 0.5) == Approx(0.25 * std::log(4.0) - 0.75).epsilon(1e-15));
  CHECK(g_of(0.0, 0.5) == Approx(-0.40342640).epsilon(1e-8));
  CHECK(g_of(0.0, 0.0) == Approx(-1.0).epsilon(1e-15));
  CHECK(g_of(0.3, 0.7) == g_of(0.7, 0.3));
}

TEST_CASE("G is symmetric") {
  const auto zs = oracle::random_points(100, 0.99, 21);
  const auto ws = oracle::random_points(100, 0.99, 22);
  for (std::size_t k = 0; k < zs.size(); ++k) CHECK(std::abs(g_of(zs[k], ws[k]) - g_of(ws[k], zs[k])) <= 1e-14);
}

TEST_CASE("G is nonpositive on a random bidisk sample") {
  const auto zs = oracle::random_points(32, 0.999, 5);
  const auto ws = oracle::random_points(32, 0.999, 6);
  for (Complex z : zs)
    for (Complex w : ws) CHECK(g_of(z, w) <= 1e-12);
}

TEST_CASE("G is continuous across the diagonal") {
  for (Complex z : oracle::random_points(20, 0.95, 8)) {
    const double diagonal = -std::pow(1.0 - std::norm(z), 2);
    CHECK(g_of(z, z) == Approx(diagonal).epsilon(1e-15));
    const double near = g_of(z, z + Complex(1e-9, 0.0));
    CHECK(std::isfinite(near));
    CHECK(std::abs(near - diagonal) < 1e-8);
    const WirtingerPair d = g_dz(DiskPoint(z), DiskPoint(z));
    CHECK(std::abs(d.d_z - std::conj(z) * (1.0 - std::norm(z))) < 1e-15);
  }
}

TEST_CASE("G and its gradient vanish on the circle") {
  const double r = 1.0 - 1e-6;
  for (Complex zeta : {Complex(0.0, 0.0), Complex(0.3, -0.2), Complex(-0.6, 0.1)}) {
    for (double t : {0.0, 1.0, 2.5, 4.0}) {
      const DiskPoint z = DiskPoint::polar(r, t);
      CHECK(std::abs(g_eval(z, DiskPoint(zeta))) < 1e-4);
      CHECK(std::abs(g_dz(z, DiskPoint(zeta)).d_z) < 1e-4);
    }
  }
}

TEST_CASE("G_z values and finite differences") {
  // d/dz G(z, 0.5) at z = 0 is -0.5 log 4 + 0.375
  const WirtingerPair d = g_dz(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0));
  CHECK(d.d_z.real() == Approx(-0.31814718).epsilon(1e-8));
  CHECK(d.d_z.imag() == Approx(0.0));
  CHECK(d.d_zbar == std::conj(d.d_z));
  CHECK(std::abs(g_dz(DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.0)).d_z) == 0.0);

  const auto fd = oracle::wirtinger_fd([](Complex w) { return g_of(w, 0.5); }, 0.0);
  CHECK(std::abs(fd.first - d.d_z) < 1e-6);

  const Complex zeta(0.6, 0.0);
  for (Complex z : {Complex(0.3, 0.0), Complex(0.1, 0.4), Complex(-0.5, -0.5)}) {
    const auto fd2 = oracle::wirtinger_fd([&](Complex w) { return g_of(w, zeta); }, z);
    const WirtingerPair p = g_dz(DiskPoint(z), DiskPoint(zeta));
    CHECK(std::abs(fd2.first - p.d_z) < 1e-6);
    CHECK(std::abs(fd2.second - p.d_zbar) < 1e-6);
  }
}

TEST_CASE("G_z growth envelope") {
  const auto zs = oracle::random_points(60, 0.98, 31);
  const auto ws = oracle::random_points(60, 0.98, 32);
  for (Complex z : zs) {
    for (Complex w : ws) {
      const double log_ratio = std::log(std::norm((z - w) / (1.0 - std::conj(w) * z)));
      CHECK(std::abs(g_dz(DiskPoint(z), DiskPoint(w)).d_z) <= 2.0 * (1.0 - log_ratio));
    }
  }
}

TEST_CASE("H2 values and the second mixed difference") {
  CHECK(h2_eval(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)) == Approx(std::log(4.0) - 0.75).epsilon(1e-15));
  CHECK(h2_eval(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)) == Approx(0.63629436).epsilon(1e-8));
  CHECK(h2_eval(DiskPoint(0.0, 0.0), DiskPoint(1e-3, 0.0)) > 10.0);
  CHECK(h2_eval(DiskPoint(0.0, 0.0), DiskPoint(1e-8, 0.0)) > h2_eval(DiskPoint(0.0, 0.0), DiskPoint(1e-3, 0.0)));
  CHECK_THROWS_AS(h2_eval(DiskPoint(0.2, 0.1), DiskPoint(0.2, 0.1)), SingularityError);

  // G_{z zbar} = (1/4) Laplacian of G
  const Complex zeta(0.6, 0.0);
  const Complex z(0.3, 0.0);
  const double h = 1e-4;
  const double lap = (g_of(z + h, zeta) + g_of(z - h, zeta) + g_of(z + Complex(0, h), zeta) +
                      g_of(z - Complex(0, h), zeta) - 4.0 * g_of(z, zeta)) / (h * h);
  CHECK(std::abs(0.25 * lap - h2_eval(DiskPoint(z), DiskPoint(zeta))) < 1e-4);
}

TEST_CASE("derivative chain G -> G_z -> H2 -> H3") {
  const Complex zeta(0.6, 0.0);
  for (Complex z : {Complex(0.3, 0.0), Complex(-0.2, 0.5), Complex(0.1, -0.7)}) {
    const auto d_of_gz = oracle::wirtinger_fd(
        [&](Complex w) { return g_dz(DiskPoint(w), DiskPoint(zeta)).d_z; }, z, 1e-4);
    CHECK(std::abs(d_of_gz.second - h2_eval(DiskPoint(z), DiskPoint(zeta))) < 1e-4);
    const auto d_of_h2 = oracle::wirtinger_fd(
        [&](Complex w) { return Complex(h2_eval(DiskPoint(w), DiskPoint(zeta))); }, z, 1e-4);
    CHECK(std::abs(d_of_h2.first - h3_eval(DiskPoint(z), DiskPoint(zeta))) < 1e-4);
  }
}

TEST_CASE("H3 values") {
  CHECK(std::abs(h3_eval(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0)) - Complex(1.125, 0.0)) < 1e-15);
  CHECK(std::abs(h3_eval(DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.5)) - Complex(0.0, -1.125)) < 1e-15);
  CHECK_THROWS_AS(h3_eval(DiskPoint(0.4, 0.0), DiskPoint(0.4, 0.0)), SingularityError);
}

TEST_CASE("Green kernels refuse the circle") {
  CHECK_THROWS_AS(g_eval(DiskPoint(1.0, 0.0), DiskPoint(0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(g_dz(DiskPoint(0.0, 0.0), DiskPoint(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(h2_eval(DiskPoint(0.0, 0.0), DiskPoint(-1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(h3_eval(DiskPoint(0.0, -1.0), DiskPoint(0.0, 0.0)), DomainError);
}

TEST_CASE("Moebius pullback values") {
  const Pullback p0 = mobius_pullback(MobiusMap(DiskPoint(0.0, 0.0)), DiskPoint(0.4, 0.0));
  CHECK(std::abs(p0.zeta.value() - Complex(-0.4, 0.0)) < 1e-16);
  CHECK(p0.jacobian == Approx(1.0).epsilon(1e-16));
  const Pullback p1 = mobius_pullback(MobiusMap(DiskPoint(0.5, 0.0)), DiskPoint(0.0, 0.0));
  CHECK(std::abs(p1.zeta.value() - Complex(0.5, 0.0)) < 1e-16);
  CHECK(p1.jacobian == Approx(0.5625).epsilon(1e-15));
  CHECK_THROWS_AS(mobius_pullback(MobiusMap(DiskPoint(0.5, 0.0)), DiskPoint(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(MobiusMap(DiskPoint(0.0, 1.0)), DomainError);
}

TEST_CASE("Moebius map is an involution with the expected Jacobian") {
  const auto centers = oracle::random_points(10, 0.95, 41);
  const auto etas = oracle::random_points(10, 0.95, 42);
  for (Complex c : centers) {
    const MobiusMap map{DiskPoint(c)};
    CHECK(std::abs(map.apply(c)) < 1e-15);
    for (Complex eta : etas) {
      const Pullback once = mobius_pullback(map, DiskPoint(eta));
      const Pullback twice = mobius_pullback(map, once.zeta);
      CHECK(std::abs(twice.zeta.value() - eta) <= 1e-14);
      CHECK(std::abs(once.zeta.value()) < 1.0);
      // |phi'(eta)|^2 from a difference quotient
      const double h = 1e-6;
      const double deriv = std::abs((map.apply(eta + h) - map.apply(eta - h)) / (2.0 * h));
      CHECK(once.jacobian == Approx(deriv * deriv).epsilon(1e-7));
    }
  }
}
