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


// Problem data: boundary functions on the unit circle, stored as uniform
// samples with their trigonometric interpolant, and source terms given as
// finite sums of monomials z^a conj(z)^b.

#pragma once

#include "biharmonic/core.hpp"

#include <span>
#include <vector>

namespace biharmonic {

struct FourierMode {
  int mode = 0;
  Complex coefficient{};
};

/// A function on the circle sampled at theta_k = 2 pi k / N (N even, N >= 4).
///
/// Between samples the data is the band-limited interpolant
///   sum_{|m| < N/2} c_m e^{i m theta} + c_{N/2} cos(N theta / 2),
/// so real samples give a real interpolant.
class BoundaryData {
 public:
  inline static constexpr int kDefaultSamples = 256;

  /// N = 256 zero samples.
  BoundaryData() : BoundaryData(std::vector<Complex>(kDefaultSamples)) {}

  /// Throws ValidationError unless the size is even and at least 4.
  explicit BoundaryData(std::vector<Complex> samples);

  /// Sum of c e^{i m theta}. With n_samples = 0 the size is the larger of 256
  /// and the smallest even N with N/2 > max |m|; an explicit size must satisfy
  /// |m| < N/2 for every mode. Repeated modes add up.
  static BoundaryData from_fourier(std::span<const FourierMode> modes, int n_samples = 0);

  static BoundaryData constant(Complex value, int n_samples = kDefaultSamples);

  int size() const noexcept { return static_cast<int>(samples_.size()); }
  std::span<const Complex> samples() const noexcept { return samples_; }

  /// Interpolant coefficient of e^{i m theta} for |m| <= N/2 (the Nyquist
  /// entry holds the full cosine amplitude).
  Complex coefficient(int mode) const;

  /// Value of the interpolant at theta.
  Complex operator()(double theta) const;

  /// Interpolant at the m equally spaced angles 2 pi j / m.
  std::vector<Complex> resample(int m) const;

  /// Largest modulus over the samples and an 8x refined resampling.
  double sup_norm() const;

  bool is_zero() const noexcept;

  /// a x + b y on a common sample count (the larger of the two).
  static BoundaryData combine(Complex a, const BoundaryData& x, Complex b, const BoundaryData& y);

  friend bool operator==(const BoundaryData& x, const BoundaryData& y) { return x.samples_ == y.samples_; }

 private:
  std::vector<Complex> samples_;
  std::vector<Complex> spectrum_;  // DFT / N, index m mod N
};

struct Monomial {
  int a = 0;
  int b = 0;
  Complex c{};

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// sum c z^a conj(z)^b with 0 <= a, b <= kMaxExponent.
class SourceTerm {
 public:
  inline static constexpr int kMaxExponent = 16;

  SourceTerm() = default;
  /// Throws ValidationError on a negative exponent or one above 16.
  explicit SourceTerm(std::vector<Monomial> terms);

  static SourceTerm constant(Complex value) { return SourceTerm({{0, 0, value}}); }

  std::span<const Monomial> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  Complex operator()(Complex z) const;

  /// Term-wise Delta^2 with Delta = d^2/(dz dzbar).
  SourceTerm bilaplacian() const;

  /// Triangle-inequality bound sum |c| of the sup over the closed disk.
  double sup_bound() const;

  /// Largest modulus on the polar grid r = i/(n_r - 1), theta = 2 pi j/n_theta.
  double sup_sampled(int n_r = 512, int n_theta = 512) const;

  SourceTerm scaled(Complex factor) const;
  SourceTerm operator+(const SourceTerm& other) const;

  friend bool operator==(const SourceTerm&, const SourceTerm&) = default;

 private:
  std::vector<Monomial> terms_;
  int max_a_ = 0;
  int max_b_ = 0;
};

}  // namespace biharmonic
