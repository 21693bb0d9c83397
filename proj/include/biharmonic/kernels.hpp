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

// Boundary kernels of the unit disk: the harmonic Poisson kernel and the two
// biharmonic Poisson kernels H0 (normal-derivative data) and F0 (trace data),
// together with their z-derivatives and the circle moments of |1 - z e^{it}|.

#pragma once

#include "biharmonic/core.hpp"

namespace biharmonic {

/// Harmonic Poisson kernel (1 - |z|^2) / |1 - z|^2.
double poisson_eval(DiskPoint z);

/// H0(z) = (1/2) (1 - |z|^2)^2 / |1 - z|^2.
double h0_eval(DiskPoint z);

/// F0(z) = H0(z) + (1/2) (1 - |z|^2)^3 / |1 - z|^4.
double f0_eval(DiskPoint z);

/// Wirtinger derivatives in z of z -> H0(z e^{-i theta}).
WirtingerPair h0_dz(DiskPoint z, double theta);

/// Wirtinger derivatives in z of z -> F0(z e^{-i theta}).
WirtingerPair f0_dz(DiskPoint z, double theta);

/// Circle mean (1/2pi) int dt / |1 - r e^{it}|^{2 beta}.
///
/// beta = 1 and beta = 2 use the closed forms 1/(1-r^2) and
/// (1+r^2)/(1-r^2)^3; any other beta sums the squared binomial series
/// sum_n (Gamma(n+beta) / (n! Gamma(beta)))^2 r^{2n}.
double kernel_moment(double beta, double r);

/// The series form of kernel_moment, for every beta. Summation stops once the
/// next term falls below 1e-16 times the partial sum, or after 100000 terms.
double kernel_moment_series(double beta, double r);

enum class PolylogForm { plain, radial };

/// int_0^1 t^a log(1/t)^{p-1} dt = Gamma(p) / (1+a)^p (plain form), or the
/// substituted int_0^1 r^{2a+1} log(1/r^2)^{p-1} dr = Gamma(p) / (2 (1+a)^p)
/// (radial form). Requires a > -1 and p >= 1.
double polylog_integral(double a, double p, PolylogForm form);

namespace detail {

// Unchecked kernels on raw complex arguments, for quadrature inner loops.
// `rot` is e^{-i theta}.

inline double h0(Complex w) {
  const double s = 1.0 - std::norm(w);
  return 0.5 * s * s / std::norm(1.0 - w);
}

inline double f0(Complex w) {
  const double s = 1.0 - std::norm(w);
  const double d = std::norm(1.0 - w);
  return 0.5 * s * s / d + 0.5 * s * s * s / (d * d);
}

inline Complex h0_dz(Complex z, Complex rot) {
  const double s = 1.0 - std::norm(z);
  const Complex zb = std::conj(z);
  const Complex a = 1.0 - z * rot;
  const Complex b = 1.0 - zb * std::conj(rot);
  return s * (rot * s - 2.0 * zb * a) / (2.0 * b * a * a);
}

inline Complex f0_dz(Complex z, Complex rot) {
  const double s = 1.0 - std::norm(z);
  const Complex zb = std::conj(z);
  const Complex a = 1.0 - z * rot;
  const Complex b = 1.0 - zb * std::conj(rot);
  const Complex first = s * (rot * s - 2.0 * zb * a) / (2.0 * b * a * a);
  const Complex second = s * s * (2.0 * rot * s - 3.0 * zb * a) / (2.0 * b * b * a * a * a);
  return first + second;
}

}  // namespace detail

}  // namespace biharmonic
