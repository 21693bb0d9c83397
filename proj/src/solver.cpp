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


#include "biharmonic/solver.hpp"

#include "biharmonic/green.hpp"
#include "biharmonic/kernels.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace biharmonic {

namespace {

struct BoundarySums {
  Complex value{};
  WirtingerPair gradient{};
};

// One pass over the circle nodes for F0[f] + H0[h] and, on request, its
// Wirtinger derivatives. Skips channels with all-zero data.
BoundarySums boundary_sums(const std::vector<Complex>& f, const std::vector<Complex>& h, bool f_zero,
                           bool h_zero, Complex z, const CircleRule& rule, bool want_value, bool want_gradient) {
  BoundarySums out;
  if (f_zero && h_zero) return out;
  const auto units = rule.unit_points();
  const double w = rule.weight();
  for (std::size_t k = 0; k < units.size(); ++k) {
    const Complex rot = std::conj(units[k]);
    if (want_value) {
      const Complex arg = z * rot;
      if (!f_zero) out.value += detail::f0(arg) * f[k];
      if (!h_zero) out.value += detail::h0(arg) * h[k];
    }
    if (want_gradient) {
      if (!f_zero) {
        const Complex d = detail::f0_dz(z, rot);
        out.gradient.d_z += d * f[k];
        out.gradient.d_zbar += std::conj(d) * f[k];
      }
      if (!h_zero) {
        const Complex d = detail::h0_dz(z, rot);
        out.gradient.d_z += d * h[k];
        out.gradient.d_zbar += std::conj(d) * h[k];
      }
    }
  }
  out.value *= w;
  out.gradient.d_z *= w;
  out.gradient.d_zbar *= w;
  return out;
}

Complex green_value(const SourceTerm& g, Complex z, const DiskRule& centered) {
  if (g.empty()) return {};
  return centered.integrate([&](Complex zeta) { return detail::g(z, zeta) * g(zeta); });
}

WirtingerPair green_grad(const SourceTerm& g, Complex z, const DiskRule& centered) {
  if (g.empty()) return {};
  WirtingerPair out;
  out.d_z = centered.integrate([&](Complex zeta) { return detail::g_dz(z, zeta) * g(zeta); });
  out.d_zbar = centered.integrate([&](Complex zeta) { return std::conj(detail::g_dz(z, zeta)) * g(zeta); });
  return out;
}

class Fnv1a {
 public:
  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  void text(const char* s) { bytes(s, std::char_traits<char>::length(s)); }
  void integer(std::int64_t v) { bytes(&v, sizeof v); }
  void real(double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v);  // fold -0
    bytes(&bits, sizeof bits);
  }
  void complex(Complex c) {
    real(c.real());
    real(c.imag());
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

Case linear_combination(Complex a, const Case& x, Complex b, const Case& y) {
  return {BoundaryData::combine(a, x.f, b, y.f), BoundaryData::combine(a, x.h, b, y.h),
          x.g.scaled(a) + y.g.scaled(b)};
}

Rules::Rules(const QuadratureSizes& sizes)
    : circle(sizes.circle_nodes), disk(DiskRule::centered(DiskPoint{}, sizes.disk_angular, sizes.centered)) {}

Complex f0_transform(const BoundaryData& f, DiskPoint z, const CircleRule& rule) {
  z.require_interior("f0_transform");
  const std::vector<Complex> samples = f.resample(rule.size());
  return boundary_sums(samples, samples, f.is_zero(), true, z.value(), rule, true, false).value;
}

Complex h0_transform(const BoundaryData& h, DiskPoint z, const CircleRule& rule) {
  z.require_interior("h0_transform");
  const std::vector<Complex> samples = h.resample(rule.size());
  return boundary_sums(samples, samples, true, h.is_zero(), z.value(), rule, true, false).value;
}

Complex green_potential(const SourceTerm& g, DiskPoint z, const DiskRule& rule) {
  z.require_interior("green_potential");
  if (!rule.is_centered()) throw std::invalid_argument("green_potential: rule must be centered");
  return green_value(g, z.value(), rule.resolving(z));
}

namespace {

CircleRule resolving_rule(const CircleRule& rule, double r) {
  const int n = resolving_circle_size(r, rule.size(), kEvaluationFactor);
  return n == rule.size() ? rule : CircleRule(n);
}

}  // namespace

Complex solve_point(const Case& data, DiskPoint z, const Rules& rules) {
  z.require_interior("solve_point");
  const CircleRule circle = resolving_rule(rules.circle, z.modulus());
  return f0_transform(data.f, z, circle) + h0_transform(data.h, z, circle) - green_potential(data.g, z, rules.disk);
}

WirtingerPair gradient_point(const Case& data, DiskPoint z, const Rules& rules) {
  z.require_interior("gradient_point");
  if (!rules.disk.is_centered()) throw std::invalid_argument("gradient_point: disk rule must be centered");
  const CircleRule circle = resolving_rule(rules.circle, z.modulus());
  const int m = circle.size();
  const BoundarySums b = boundary_sums(data.f.resample(m), data.h.resample(m), data.f.is_zero(), data.h.is_zero(),
                                       z.value(), circle, false, true);
  return b.gradient - green_grad(data.g, z.value(), rules.disk.resolving(z));
}

bool circle_rule_resolves(double r, int circle_nodes, double factor) noexcept {
  return (1.0 - r) * circle_nodes >= factor;
}

int resolving_circle_size(double r, int circle_nodes, double factor) {
  int n = circle_nodes;
  while (!circle_rule_resolves(r, n, factor)) {
    if (n > kMaxCircleNodes / 2) {
      throw PolicyError("radius " + std::to_string(r) + " needs more than " + std::to_string(kMaxCircleNodes) +
                        " circle nodes");
    }
    n *= 2;
  }
  return n;
}

std::size_t SolutionField::holes() const {
  std::size_t n = 0;
  for (const auto& node : nodes) n += node.error.empty() ? 0 : 1;
  return n;
}

Solver::Solver(Case data, QuadratureSizes sizes, SolverOptions options)
    : data_(std::move(data)), sizes_(sizes), options_(options), rules_(sizes_) {
  f_nodes_ = data_.f.resample(sizes_.circle_nodes);
  h_nodes_ = data_.h.resample(sizes_.circle_nodes);
}

Solver::BoundaryResult Solver::boundary_eval(Complex z, bool want_value, bool want_gradient) const {
  const bool f_zero = data_.f.is_zero();
  const bool h_zero = data_.h.is_zero();
  const int n = resolving_circle_size(std::abs(z), sizes_.circle_nodes, kEvaluationFactor);
  BoundarySums b;
  if (n == sizes_.circle_nodes) {
    b = boundary_sums(f_nodes_, h_nodes_, f_zero, h_zero, z, rules_.circle, want_value, want_gradient);
  } else {
    b = boundary_sums(data_.f.resample(n), data_.h.resample(n), f_zero, h_zero, z, CircleRule(n), want_value,
                      want_gradient);
  }
  return {b.value, b.gradient};
}

Complex Solver::boundary_part(DiskPoint z) const {
  z.require_interior("Solver::boundary_part");
  return boundary_eval(z.value(), true, false).value;
}

Complex Solver::green_part(DiskPoint z) const {
  z.require_interior("Solver::green_part");
  return green_value(data_.g, z.value(), rules_.disk.resolving(z));
}

Complex Solver::value(DiskPoint z) const { return boundary_part(z) + options_.green_sign * green_part(z); }

WirtingerPair Solver::boundary_gradient(DiskPoint z) const {
  z.require_interior("Solver::boundary_gradient");
  return boundary_eval(z.value(), false, true).gradient;
}

WirtingerPair Solver::green_gradient(DiskPoint z) const {
  z.require_interior("Solver::green_gradient");
  return green_grad(data_.g, z.value(), rules_.disk.resolving(z));
}

WirtingerPair Solver::gradient(DiskPoint z) const {
  WirtingerPair out = boundary_gradient(z);
  const WirtingerPair g = green_gradient(z);
  out.d_z += options_.green_sign * g.d_z;
  out.d_zbar += options_.green_sign * g.d_zbar;
  return out;
}

SolutionField Solver::solve_grid(int n_r, int n_theta, const GridOptions& options) const {
  if (n_r < 2 || n_theta < 2) throw ValidationError("solve_grid: n_r and n_theta must be at least 2");
  const double r_max = static_cast<double>(n_r - 1) / n_r;
  if (r_max > 0.999) throw PolicyError("solve_grid: grid radii must not exceed 0.999");
  if (!options.allow_under_resolved && !circle_rule_resolves(r_max, sizes_.circle_nodes)) {
    throw PolicyError("solve_grid: radius " + std::to_string(r_max) + " is under-resolved by " +
                      std::to_string(sizes_.circle_nodes) + " circle nodes; (1 - r) n must be at least 10");
  }

  // Source terms grouped by angular frequency a - b.
  std::map<int, std::vector<Monomial>> groups;
  for (const auto& t : data_.g.terms()) groups[t.a - t.b].push_back(t);
  std::vector<std::pair<int, SourceTerm>> sources;
  for (auto& [k, terms] : groups) sources.emplace_back(k, SourceTerm(std::move(terms)));

  SolutionField field;
  field.n_r = n_r;
  field.n_theta = n_theta;
  field.with_gradient = options.with_gradient;
  field.fingerprint = fingerprint();
  field.nodes.resize(static_cast<std::size_t>(n_r) * n_theta);

  const bool f_zero = data_.f.is_zero();
  const bool h_zero = data_.h.is_zero();
  for (int i = 0; i < n_r; ++i) {
    const double r = static_cast<double>(i) / n_r;
    std::vector<Complex> ring_value(sources.size());
    std::vector<WirtingerPair> ring_grad(sources.size());
    std::string ring_error;
    // circle rule for this ring, refined the same way as point evaluation
    const int ring_nodes = resolving_circle_size(r, sizes_.circle_nodes, kEvaluationFactor);
    const bool base_ring = ring_nodes == sizes_.circle_nodes;
    const CircleRule ring_circle = base_ring ? rules_.circle : CircleRule(ring_nodes);
    const std::vector<Complex> ring_f = base_ring ? f_nodes_ : data_.f.resample(ring_nodes);
    const std::vector<Complex> ring_h = base_ring ? h_nodes_ : data_.h.resample(ring_nodes);
    try {
      const DiskRule centered = rules_.disk.resolving(DiskPoint(r, 0.0));
      for (std::size_t s = 0; s < sources.size(); ++s) {
        ring_value[s] = green_value(sources[s].second, r, centered);
        if (options.with_gradient) ring_grad[s] = green_grad(sources[s].second, r, centered);
      }
    } catch (const std::exception& e) {
      ring_error = e.what();
    }
    for (int j = 0; j < n_theta; ++j) {
      FieldNode& node = field.nodes[static_cast<std::size_t>(i) * n_theta + j];
      node.r = r;
      node.theta = 2.0 * std::numbers::pi * j / n_theta;
      if (!ring_error.empty()) {
        node.error = ring_error;
        continue;
      }
      try {
        const Complex z = std::polar(r, node.theta);
        const BoundarySums b = boundary_sums(ring_f, ring_h, f_zero, h_zero, z, ring_circle, true,
                                             options.with_gradient);
        Complex value = b.value;
        WirtingerPair grad = b.gradient;
        for (std::size_t s = 0; s < sources.size(); ++s) {
          const int k = sources[s].first;
          value += options_.green_sign * std::polar(1.0, k * node.theta) * ring_value[s];
          grad.d_z += options_.green_sign * std::polar(1.0, (k - 1) * node.theta) * ring_grad[s].d_z;
          grad.d_zbar += options_.green_sign * std::polar(1.0, (k + 1) * node.theta) * ring_grad[s].d_zbar;
        }
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
          throw DomainError("solve_grid: non-finite value");
        }
        node.value = value;
        if (options.with_gradient) node.gradient = grad;
      } catch (const std::exception& e) {
        node.error = e.what();
      }
    }
  }
  return field;
}

std::string Solver::fingerprint() const { return case_fingerprint(data_, sizes_, options_.green_sign); }

SolutionField solve_grid(const Case& data, int n_r, int n_theta, const GridOptions& options,
                         const QuadratureSizes& sizes) {
  return Solver(data, sizes).solve_grid(n_r, n_theta, options);
}

std::string case_fingerprint(const Case& data, const QuadratureSizes& sizes, double green_sign) {
  Fnv1a h;
  for (const auto* channel : {&data.f, &data.h}) {
    h.text(channel == &data.f ? "f" : "h");
    h.integer(channel->size());
    for (const Complex& v : channel->samples()) h.complex(v);
  }
  h.text("g");
  h.integer(static_cast<std::int64_t>(data.g.terms().size()));
  for (const auto& t : data.g.terms()) {
    h.integer(t.a);
    h.integer(t.b);
    h.complex(t.c);
  }
  h.text("q");
  for (int v : {sizes.circle_nodes, sizes.disk_radial, sizes.disk_angular, sizes.centered.inner_panels,
                sizes.centered.outer_panels, sizes.centered.order}) {
    h.integer(v);
  }
  h.real(sizes.centered.r_min);
  h.real(sizes.centered.split);
  h.real(green_sign);
  return h.hex();
}

}  // namespace biharmonic
