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

#include <cmath>

namespace biharmonic {

double poisson_eval(DiskPoint z) {
  z.require_interior("poisson_eval");
  const Complex w = z.value();
  return (1.0 - std::norm(w)) / std::norm(1.0 - w);
}

double h0_eval(DiskPoint z) { return detail::h0(z.require_interior("h0_eval").value()); }

double f0_eval(DiskPoint z) { return detail::f0(z.require_interior("f0_eval").value()); }

WirtingerPair h0_dz(DiskPoint z, double theta) {
  const Complex d = detail::h0_dz(z.require_interior("h0_dz").value(), std::polar(1.0, -theta));
  return {d, std::conj(d)};
}

WirtingerPair f0_dz(DiskPoint z, double theta) {
  const Complex d = detail::f0_dz(z.require_interior("f0_dz").value(), std::polar(1.0, -theta));
  return {d, std::conj(d)};
}

namespace {

void check_moment_args(double beta, double r) {
  if (!(beta > 0.0)) throw DomainError("kernel_moment: beta must be positive");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("kernel_moment: r must lie in [0, 1)");
}

}  // namespace

double kernel_moment_series(double beta, double r) {
  check_moment_args(beta, r);
  const double r2 = r * r;
  // a_n = Gamma(n+beta) / (n! Gamma(beta)), a_{n+1} = a_n (n+beta)/(n+1)
  double a = 1.0;
  double power = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 100000; ++n) {
    a *= (n + beta) / (n + 1.0);
    power *= r2;
    const double term = a * a * power;
    if (term < 1e-16 * sum) break;
    sum += term;
  }
  return sum;
}

double kernel_moment(double beta, double r) {
  check_moment_args(beta, r);
  const double s = 1.0 - r * r;
  if (beta == 1.0) return 1.0 / s;
  if (beta == 2.0) return (1.0 + r * r) / (s * s * s);
  return kernel_moment_series(beta, r);
}

double polylog_integral(double a, double p, PolylogForm form) {
  if (!(a > -1.0)) throw DomainError("polylog_integral: a must exceed -1");
  if (!(p >= 1.0)) throw DomainError("polylog_integral: p must be at least 1");
  const double value = std::tgamma(p) / std::pow(1.0 + a, p);
  return form == PolylogForm::radial ? 0.5 * value : value;
}

}  // namespace biharmonic
