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


#include "biharmonic/boundary.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace biharmonic {

namespace {

std::vector<Complex> forward_dft(const std::vector<Complex>& samples) {
  Eigen::FFT<double> fft;
  std::vector<Complex> out;
  fft.fwd(out, samples);
  const double n = static_cast<double>(samples.size());
  for (auto& c : out) c /= n;
  return out;
}

// Unscaled inverse DFT: out_j = sum_k in_k e^{2 pi i jk/M}.
std::vector<Complex> synthesize(const std::vector<Complex>& bins) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<Complex> out;
  fft.inv(out, bins);
  return out;
}

int wrap(int m, int n) { return ((m % n) + n) % n; }

}  // namespace

BoundaryData::BoundaryData(std::vector<Complex> samples) : samples_(std::move(samples)) {
  const int n = size();
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("BoundaryData: sample count must be even and at least 4, got " + std::to_string(n));
  }
  for (const Complex& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError("BoundaryData: samples must be finite");
    }
  }
  spectrum_ = forward_dft(samples_);
}

BoundaryData BoundaryData::from_fourier(std::span<const FourierMode> modes, int n_samples) {
  int max_mode = 0;
  for (const auto& fm : modes) max_mode = std::max(max_mode, std::abs(fm.mode));
  int n = n_samples;
  if (n == 0) {
    n = std::max(kDefaultSamples, 2 * max_mode + 2);
  } else if (2 * max_mode >= n) {
    throw ValidationError("BoundaryData: Fourier mode " + std::to_string(max_mode) +
                          " needs more than " + std::to_string(n) + " samples");
  }
  if (n < 4 || n % 2 != 0) {
    throw ValidationError("BoundaryData: sample count must be even and at least 4, got " + std::to_string(n));
  }
  std::vector<Complex> bins(n);
  for (const auto& fm : modes) bins[wrap(fm.mode, n)] += fm.coefficient;
  return BoundaryData(synthesize(bins));
}

BoundaryData BoundaryData::constant(Complex value, int n_samples) {
  return BoundaryData(std::vector<Complex>(n_samples, value));
}

Complex BoundaryData::coefficient(int mode) const {
  const int n = size();
  if (std::abs(mode) > n / 2) return {};
  if (std::abs(mode) == n / 2) return spectrum_[n / 2];
  return spectrum_[wrap(mode, n)];
}

Complex BoundaryData::operator()(double theta) const {
  const int n = size();
  Complex sum = spectrum_[n / 2] * std::cos(0.5 * n * theta);
  for (int m = -n / 2 + 1; m < n / 2; ++m) sum += spectrum_[wrap(m, n)] * std::polar(1.0, m * theta);
  return sum;
}

std::vector<Complex> BoundaryData::resample(int m) const {
  if (m < 1) throw ValidationError("BoundaryData::resample: size must be positive");
  const int n = size();
  if (m == n) return samples_;
  // Fold every interpolant mode onto the m-point grid, where e^{i k theta_j}
  // only depends on k mod m. The Nyquist cosine splits into modes +-n/2.
  std::vector<Complex> bins(m);
  for (int k = -n / 2 + 1; k < n / 2; ++k) bins[wrap(k, m)] += spectrum_[wrap(k, n)];
  bins[wrap(n / 2, m)] += 0.5 * spectrum_[n / 2];
  bins[wrap(-n / 2, m)] += 0.5 * spectrum_[n / 2];
  return synthesize(bins);
}

double BoundaryData::sup_norm() const {
  double sup = 0.0;
  for (const Complex& v : samples_) sup = std::max(sup, std::abs(v));
  for (const Complex& v : resample(8 * size())) sup = std::max(sup, std::abs(v));
  return sup;
}

bool BoundaryData::is_zero() const noexcept {
  return std::all_of(samples_.begin(), samples_.end(), [](const Complex& v) { return v == Complex{}; });
}

BoundaryData BoundaryData::combine(Complex a, const BoundaryData& x, Complex b, const BoundaryData& y) {
  const int n = std::max(x.size(), y.size());
  const std::vector<Complex> xs = x.resample(n);
  const std::vector<Complex> ys = y.resample(n);
  std::vector<Complex> out(n);
  for (int k = 0; k < n; ++k) out[k] = a * xs[k] + b * ys[k];
  return BoundaryData(std::move(out));
}

SourceTerm::SourceTerm(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.a < 0 || t.b < 0) throw ValidationError("SourceTerm: negative exponent");
    if (t.a > kMaxExponent || t.b > kMaxExponent) {
      throw ValidationError("SourceTerm: exponent exceeds " + std::to_string(kMaxExponent));
    }
    if (!std::isfinite(t.c.real()) || !std::isfinite(t.c.imag())) {
      throw ValidationError("SourceTerm: coefficients must be finite");
    }
    max_a_ = std::max(max_a_, t.a);
    max_b_ = std::max(max_b_, t.b);
  }
}

Complex SourceTerm::operator()(Complex z) const {
  if (terms_.empty()) return {};
  Complex zp[kMaxExponent + 1];
  Complex zbp[kMaxExponent + 1];
  zp[0] = zbp[0] = 1.0;
  const Complex zb = std::conj(z);
  for (int k = 1; k <= max_a_; ++k) zp[k] = zp[k - 1] * z;
  for (int k = 1; k <= max_b_; ++k) zbp[k] = zbp[k - 1] * zb;
  Complex sum{};
  for (const auto& t : terms_) sum += t.c * zp[t.a] * zbp[t.b];
  return sum;
}

SourceTerm SourceTerm::bilaplacian() const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    const double factor = static_cast<double>(t.a) * (t.a - 1) * t.b * (t.b - 1);
    if (factor != 0.0) out.push_back({t.a - 2, t.b - 2, factor * t.c});
  }
  return SourceTerm(std::move(out));
}

double SourceTerm::sup_bound() const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += std::abs(t.c);
  return sum;
}

double SourceTerm::sup_sampled(int n_r, int n_theta) const {
  if (n_r < 2 || n_theta < 1) throw ValidationError("SourceTerm::sup_sampled: grid too small");
  double sup = 0.0;
  for (int i = 0; i < n_r; ++i) {
    const double r = static_cast<double>(i) / (n_r - 1);
    for (int j = 0; j < n_theta; ++j) {
      sup = std::max(sup, std::abs((*this)(std::polar(r, 2.0 * std::numbers::pi * j / n_theta))));
    }
  }
  return sup;
}

SourceTerm SourceTerm::scaled(Complex factor) const {
  std::vector<Monomial> out(terms_);
  for (auto& t : out) t.c *= factor;
  return SourceTerm(std::move(out));
}

SourceTerm SourceTerm::operator+(const SourceTerm& other) const {
  std::vector<Monomial> out(terms_);
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return SourceTerm(std::move(out));
}

}  // namespace biharmonic
