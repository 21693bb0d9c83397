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


// Quantitative Lipschitz constants of the solution map. The data enter
// through
//
//   P = (220/3) L + 4 |h|_inf + (23/3) |g|_inf,
//
// where L is the Lipschitz constant of f, and the gradient at the origin
// through A = |Phi_z(0)|^2, B = |Phi_zbar(0)|^2 and Q = A - B. Phi is
// P-Lipschitz, and the co-Lipschitz bound Q / P - 2P is positive exactly when
// Q > 2 P^2.

#pragma once

#include "biharmonic/solver.hpp"

#include <cstdint>
#include <string>

namespace biharmonic {

/// The real 2x2 differential of a map with Wirtinger derivatives (p_z, p_zbar).
struct GradientMatrixStats {
  double norm = 0.0;         // |p_z| + |p_zbar|
  double min_stretch = 0.0;  // ||p_z| - |p_zbar||
  double jacobian = 0.0;     // |p_z|^2 - |p_zbar|^2
};

GradientMatrixStats gradient_stats(const WirtingerPair& p);

/// max_{j != k} |f_j - f_k| / |e^{i theta_j} - e^{i theta_k}| over the
/// samples. Throws DegenerateError below 8 samples.
double estimate_boundary_lipschitz(const BoundaryData& f);

/// (220/3) l + 4 h_sup + (23/3) g_sup. Throws DomainError on a negative input.
double p_bound(double l, double h_sup, double g_sup);

struct ABValues {
  // Operational values from the kernel-derivative gradient at 0.
  Complex phi_z{};
  Complex phi_zbar{};
  double a_value = 0.0;
  double b_value = 0.0;
  double q_value = 0.0;

  // Closed formulas: boundary term (1/4pi) int e^{-+i t} (3f + h) dt and
  // Green term int conj(zeta) or zeta times (log|zeta|^2 + 1 - |zeta|^2) g dA,
  // entering with a minus sign ("literal") or a plus sign ("toggled").
  Complex boundary_z{};
  Complex boundary_zbar{};
  Complex green_z{};
  Complex green_zbar{};
  double literal_a = 0.0;
  double literal_b = 0.0;
  double toggled_a = 0.0;
  double toggled_b = 0.0;
};

ABValues compute_ab(const Case& data, const Rules& rules);

enum class Verdict { bi_lipschitz, lipschitz_only };

const char* to_string(Verdict v) noexcept;

struct LipschitzInputs {
  double l_boundary = 0.0;
  double h_sup = 0.0;
  double g_sup = 0.0;
  double a_value = 0.0;
  double b_value = 0.0;
};

struct LipschitzReport {
  double l_boundary = 0.0;
  double h_sup = 0.0;
  double g_sup = 0.0;
  double p_upper = 0.0;
  double a_value = 0.0;
  double b_value = 0.0;
  double q_value = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  Verdict verdict = Verdict::lipschitz_only;
};

/// Throws DegenerateError when P = 0.
LipschitzReport classify(const LipschitzInputs& in);

struct QuotientOptions {
  std::uint64_t seed = 42;
  std::size_t max_random_pairs = 100000;
};

struct QuotientEstimate {
  double value = 0.0;
  std::size_t pairs = 0;
};

/// Largest |Phi(z1) - Phi(z2)| / |z1 - z2| over node pairs of a field: every
/// pair of lattice neighbours plus seeded random pairs (all pairs when there
/// are no more than max_random_pairs). Holes and coincident points are
/// skipped. Throws DegenerateError with fewer than two distinct valued nodes.
QuotientEstimate empirical_quotient_estimate(const SolutionField& field, const QuotientOptions& options = {});
double empirical_quotient(const SolutionField& field, const QuotientOptions& options = {});

/// Full analysis of a case: L from the samples of f, |h|_inf from
/// BoundaryData::sup_norm, |g|_inf from the certified bound sum |c| (the
/// sampled sup is reported next to it), A and B from compute_ab.
struct CaseAnalysis {
  LipschitzReport report;
  ABValues ab;
  double g_sup_sampled = 0.0;
};

CaseAnalysis analyze_case(const Case& data, const Rules& rules);

}  // namespace biharmonic
