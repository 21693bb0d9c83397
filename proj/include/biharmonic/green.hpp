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

// Biharmonic Green function of the unit disk
//
//   G(z, zeta) = |z - zeta|^2 log |(1 - conj(zeta) z) / (z - zeta)|^2
//                - (1 - |z|^2)(1 - |zeta|^2)
//
// and its derivatives in z. G vanishes with its gradient on the circle and
// Delta^2_z G = -delta_zeta with Delta = d^2/(dz dzbar) and the normalized
// area measure, so -G[g] carries a source g.

#pragma once

#include "biharmonic/core.hpp"

#include <cmath>

namespace biharmonic {

/// G(z, zeta). Symmetric in its arguments; continuous across the diagonal
/// where it equals -(1 - |z|^2)^2.
double g_eval(DiskPoint z, DiskPoint zeta);

/// dG/dz and dG/dzbar = conj(dG/dz). Continuous across the diagonal with
/// limit d_z = conj(z) (1 - |z|^2).
WirtingerPair g_dz(DiskPoint z, DiskPoint zeta);

/// H2 = G_{z zbar}(z, zeta) off the diagonal. Throws SingularityError at
/// z == zeta.
double h2_eval(DiskPoint z, DiskPoint zeta);

/// H3 = G_{z zbar z}(z, zeta) off the diagonal. Throws SingularityError at
/// z == zeta.
Complex h3_eval(DiskPoint z, DiskPoint zeta);

/// Disk automorphism eta = phi(zeta) = (c - zeta) / (1 - zeta conj(c)) with
/// center c. phi is an involution and sends c to 0.
class MobiusMap {
 public:
  explicit MobiusMap(DiskPoint center);

  DiskPoint center() const noexcept { return center_; }

  Complex apply(Complex w) const noexcept {
    const Complex c = center_.value();
    return (c - w) / (1.0 - w * std::conj(c));
  }

  /// Area-measure Jacobian |phi'(eta)|^2 = (1 - |c|^2)^2 / |1 - eta conj(c)|^4.
  double jacobian(Complex eta) const noexcept {
    const double s = 1.0 - center_.norm();
    const double d = std::norm(1.0 - eta * std::conj(center_.value()));
    return s * s / (d * d);
  }

 private:
  DiskPoint center_;
};

struct Pullback {
  DiskPoint zeta;
  double jacobian;
};

/// Pre-image zeta = phi(eta) and the area Jacobian dA(zeta)/dA(eta).
Pullback mobius_pullback(const MobiusMap& map, DiskPoint eta);

namespace detail {

inline double g(Complex z, Complex zeta) {
  const Complex d = z - zeta;
  const double d2 = std::norm(d);
  const double cross = (1.0 - std::norm(z)) * (1.0 - std::norm(zeta));
  if (d2 == 0.0) return -cross;
  // log of the ratio split so that 0 * log(0) never forms
  return d2 * (std::log(std::norm(1.0 - std::conj(zeta) * z)) - std::log(d2)) - cross;
}

inline Complex g_dz(Complex z, Complex zeta) {
  const Complex zb = std::conj(z);
  const double s = 1.0 - std::norm(zeta);
  const Complex d = z - zeta;
  const double d2 = std::norm(d);
  if (d2 == 0.0) return zb * s;
  const Complex q = 1.0 - std::conj(zeta) * z;
  const double log_ratio = std::log(std::norm(q)) - std::log(d2);
  return std::conj(d) * log_ratio - std::conj(d) * s / q + zb * s;
}

}  // namespace detail

}  // namespace biharmonic
