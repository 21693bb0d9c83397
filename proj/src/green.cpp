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

namespace biharmonic {

double g_eval(DiskPoint z, DiskPoint zeta) {
  z.require_interior("g_eval");
  zeta.require_interior("g_eval");
  return detail::g(z.value(), zeta.value());
}

WirtingerPair g_dz(DiskPoint z, DiskPoint zeta) {
  z.require_interior("g_dz");
  zeta.require_interior("g_dz");
  const Complex d = detail::g_dz(z.value(), zeta.value());
  return {d, std::conj(d)};
}

double h2_eval(DiskPoint z, DiskPoint zeta) {
  z.require_interior("h2_eval");
  zeta.require_interior("h2_eval");
  const Complex w = z.value();
  const Complex c = zeta.value();
  if (w == c) throw SingularityError("h2_eval: logarithmic singularity at z == zeta");
  const double q2 = std::norm(1.0 - std::conj(c) * w);
  const double log_ratio = std::log(q2) - std::log(std::norm(w - c));
  return log_ratio - (1.0 - std::norm(c)) * (1.0 - std::norm(w) * std::norm(c)) / q2;
}

Complex h3_eval(DiskPoint z, DiskPoint zeta) {
  z.require_interior("h3_eval");
  zeta.require_interior("h3_eval");
  const Complex w = z.value();
  const Complex c = zeta.value();
  if (w == c) throw SingularityError("h3_eval: pole at z == zeta");
  const double s = 1.0 - std::norm(c);
  const Complex q = 1.0 - std::conj(c) * w;
  return -s / ((w - c) * q) - std::conj(c) * s / (q * q);
}

MobiusMap::MobiusMap(DiskPoint center) : center_(center) {
  center_.require_interior("MobiusMap");
}

Pullback mobius_pullback(const MobiusMap& map, DiskPoint eta) {
  eta.require_interior("mobius_pullback");
  const Complex w = eta.value();
  return {DiskPoint(map.apply(w)), map.jacobian(w)};
}

}  // namespace biharmonic
