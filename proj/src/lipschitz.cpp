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


#include "biharmonic/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace biharmonic {

GradientMatrixStats gradient_stats(const WirtingerPair& p) {
  const double a = std::abs(p.d_z);
  const double b = std::abs(p.d_zbar);
  return {a + b, std::abs(a - b), a * a - b * b};
}

double estimate_boundary_lipschitz(const BoundaryData& f) {
  const int n = f.size();
  if (n < 8) throw DegenerateError("estimate_boundary_lipschitz: at least 8 samples are required");
  const auto s = f.samples();
  // The chord |e^{i t_j} - e^{i t_k}| only depends on (k - j) mod n.
  std::vector<double> chord(n);
  for (int d = 1; d < n; ++d) chord[d] = 2.0 * std::sin(std::numbers::pi * d / n);
  double best = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) best = std::max(best, std::abs(s[j] - s[k]) / chord[k - j]);
  }
  return best;
}

double p_bound(double l, double h_sup, double g_sup) {
  if (l < 0.0 || h_sup < 0.0 || g_sup < 0.0) throw DomainError("p_bound: arguments must be nonnegative");
  return 220.0 / 3.0 * l + 4.0 * h_sup + 23.0 / 3.0 * g_sup;
}

ABValues compute_ab(const Case& data, const Rules& rules) {
  ABValues out;
  const WirtingerPair grad = gradient_point(data, DiskPoint{}, rules);
  out.phi_z = grad.d_z;
  out.phi_zbar = grad.d_zbar;
  out.a_value = std::norm(grad.d_z);
  out.b_value = std::norm(grad.d_zbar);
  out.q_value = out.a_value - out.b_value;

  const int m = rules.circle.size();
  const std::vector<Complex> f = data.f.resample(m);
  const std::vector<Complex> h = data.h.resample(m);
  const auto units = rules.circle.unit_points();
  for (int k = 0; k < m; ++k) {
    const Complex w = 3.0 * f[k] + h[k];
    out.boundary_z += std::conj(units[k]) * w;
    out.boundary_zbar += units[k] * w;
  }
  // (1/4pi) int = (1/2) circle mean
  out.boundary_z *= 0.5 / m;
  out.boundary_zbar *= 0.5 / m;

  if (!data.g.empty()) {
    const DiskRule at_origin = rules.disk.recentered(DiskPoint{});
    auto weight = [](Complex zeta) {
      const double n2 = std::norm(zeta);
      return n2 == 0.0 ? 0.0 : std::log(n2) + 1.0 - n2;
    };
    out.green_z = at_origin.integrate([&](Complex zeta) { return std::conj(zeta) * weight(zeta) * data.g(zeta); });
    out.green_zbar = at_origin.integrate([&](Complex zeta) { return zeta * weight(zeta) * data.g(zeta); });
  }
  out.literal_a = std::norm(out.boundary_z - out.green_z);
  out.literal_b = std::norm(out.boundary_zbar - out.green_zbar);
  out.toggled_a = std::norm(out.boundary_z + out.green_z);
  out.toggled_b = std::norm(out.boundary_zbar + out.green_zbar);
  return out;
}

const char* to_string(Verdict v) noexcept {
  return v == Verdict::bi_lipschitz ? "bi-lipschitz" : "lipschitz-only";
}

LipschitzReport classify(const LipschitzInputs& in) {
  LipschitzReport r;
  r.l_boundary = in.l_boundary;
  r.h_sup = in.h_sup;
  r.g_sup = in.g_sup;
  r.p_upper = p_bound(in.l_boundary, in.h_sup, in.g_sup);
  if (r.p_upper == 0.0) throw DegenerateError("classify: P = 0 (all-zero data)");
  r.a_value = in.a_value;
  r.b_value = in.b_value;
  r.q_value = in.a_value - in.b_value;
  r.upper_bound = r.p_upper;
  r.lower_bound = r.q_value / r.p_upper - 2.0 * r.p_upper;
  r.verdict = r.q_value > 2.0 * r.p_upper * r.p_upper ? Verdict::bi_lipschitz : Verdict::lipschitz_only;
  return r;
}

QuotientEstimate empirical_quotient_estimate(const SolutionField& field, const QuotientOptions& options) {
  struct Sample {
    Complex z;
    Complex value;
  };
  const int n_r = field.n_r;
  const int n_t = field.n_theta;
  // index into `samples` per lattice node, -1 for holes
  std::vector<long> slot(field.nodes.size(), -1);
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < field.nodes.size(); ++i) {
    const FieldNode& node = field.nodes[i];
    if (!node.value) continue;
    slot[i] = static_cast<long>(samples.size());
    samples.push_back({std::polar(node.r, node.theta), *node.value});
  }

  QuotientEstimate est;
  bool any_distinct = false;
  auto visit = [&](std::size_t a, std::size_t b) {
    const double dist = std::abs(samples[a].z - samples[b].z);
    if (dist < 1e-14) return;
    any_distinct = true;
    ++est.pairs;
    est.value = std::max(est.value, std::abs(samples[a].value - samples[b].value) / dist);
  };

  const std::size_t n = samples.size();
  const std::size_t all_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (all_pairs <= options.max_random_pairs) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) visit(a, b);
    }
  } else {
    if (static_cast<std::size_t>(n_r) * n_t == field.nodes.size()) {
      auto lattice = [&](int i, int j) { return slot[static_cast<std::size_t>(i) * n_t + ((j % n_t) + n_t) % n_t]; };
      for (int i = 0; i < n_r; ++i) {
        for (int j = 0; j < n_t; ++j) {
          const long here = lattice(i, j);
          if (here < 0) continue;
          for (long other : {lattice(i, j + 1), i + 1 < n_r ? lattice(i + 1, j) : -1L}) {
            if (other >= 0) visit(static_cast<std::size_t>(here), static_cast<std::size_t>(other));
          }
        }
      }
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t p = 0; p < options.max_random_pairs; ++p) {
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      if (a != b) visit(a, b);
    }
  }
  if (!any_distinct) throw DegenerateError("empirical_quotient: field needs two distinct valued nodes");
  return est;
}

double empirical_quotient(const SolutionField& field, const QuotientOptions& options) {
  return empirical_quotient_estimate(field, options).value;
}

CaseAnalysis analyze_case(const Case& data, const Rules& rules) {
  CaseAnalysis out;
  out.ab = compute_ab(data, rules);
  out.g_sup_sampled = data.g.sup_sampled();
  LipschitzInputs in;
  in.l_boundary = estimate_boundary_lipschitz(data.f);
  in.h_sup = data.h.sup_norm();
  in.g_sup = data.g.sup_bound();
  in.a_value = out.ab.a_value;
  in.b_value = out.ab.b_value;
  out.report = classify(in);
  return out;
}

}  // namespace biharmonic
