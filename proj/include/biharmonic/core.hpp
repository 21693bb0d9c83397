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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace biharmonic {

using Complex = std::complex<double>;

/// Argument outside the domain of an operation (|z| too close to 1, negative
/// parameters, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation exactly on the diagonal z == zeta of a kernel that is singular
/// there.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request the numerical policy refuses (e.g. a radius the circle rule
/// cannot resolve).
class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data too degenerate for the requested quantity.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input (case files, monomial exponents, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest modulus at which any kernel is evaluated.
inline constexpr double kKernelRadiusLimit = 1.0 - 1e-12;

/// A point of the closed unit disk.
class DiskPoint {
 public:
  constexpr DiskPoint() = default;
  DiskPoint(double re, double im) : DiskPoint(Complex{re, im}) {}
  explicit DiskPoint(Complex z) : z_(z) {
    if (!(std::norm(z) <= 1.0 + 4e-16)) {
      throw DomainError("point lies outside the closed unit disk");
    }
  }

  static DiskPoint polar(double r, double theta) { return DiskPoint(std::polar(r, theta)); }

  Complex value() const noexcept { return z_; }
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  double modulus() const noexcept { return std::abs(z_); }
  /// |z|^2
  double norm() const noexcept { return std::norm(z_); }

  /// Throws DomainError unless |z| <= kKernelRadiusLimit.
  const DiskPoint& require_interior(const char* what) const {
    if (!(modulus() <= kKernelRadiusLimit)) {
      throw DomainError(std::string(what) + ": |z| must be < 1 (limit 1 - 1e-12)");
    }
    return *this;
  }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  Complex z_{0.0, 0.0};
};

/// Wirtinger derivatives d/dz and d/dzbar of a (complex-valued) function.
struct WirtingerPair {
  Complex d_z{};
  Complex d_zbar{};

  WirtingerPair& operator+=(const WirtingerPair& o) {
    d_z += o.d_z;
    d_zbar += o.d_zbar;
    return *this;
  }
  WirtingerPair& operator-=(const WirtingerPair& o) {
    d_z -= o.d_z;
    d_zbar -= o.d_zbar;
    return *this;
  }
  friend WirtingerPair operator+(WirtingerPair a, const WirtingerPair& b) { return a += b; }
  friend WirtingerPair operator-(WirtingerPair a, const WirtingerPair& b) { return a -= b; }
};

}  // namespace biharmonic
