// Copyright 2026 The qoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qoa/weyl.hpp"

namespace qoa {

/// Density matrix: hermitian, positive semidefinite, trace one.
struct State {
  Mat rho;
};

State pure_state(const Vec& phi);

/// Seeded random density matrix (normalized Wishart sample).
State random_mixed_state(int dim, std::uint64_t seed);

void validate_state(const State& s, double eps = 1e-8);

/// Observable given by its spectral projections P_i (pairwise
/// orthogonal, summing to I).
struct ObservableSpec {
  std::vector<Mat> projections;
};

/// Rank-1 spectral projections of the basis vectors.
ObservableSpec observable_from_basis(const Basis& b);

void validate_observable(const ObservableSpec& a, double eps = 1e-8);

/// Positive operator valued measure: effects E_i >= 0 with sum I.
struct Povm {
  std::vector<Mat> effects;
};

void validate_povm(const Povm& e, double eps = 1e-8);

/// H(A, rho) = sum_i eta(Tr(rho P_i)), natural log, eta(t) = -t log t.
double observable_entropy(const ObservableSpec& a, const State& s);

/// c = sqrt(max_ij Tr P_i Q_j) for maximal Abelian observables; in
/// [1/sqrt(n), 1], and 1/sqrt(n) exactly for mutually unbiased pairs.
double mu_constant(const ObservableSpec& a, const ObservableSpec& b);

/// H(A, rho) + H(B, rho) + 2 log c; nonnegative for every valid state.
double mu_slack(const ObservableSpec& a, const ObservableSpec& b,
                const State& s);

struct PovmSlackResult {
  double slack = 0.0;
  double sup_ratio = 0.0;
  int skipped_terms = 0;   // terms with a vanishing denominator
  bool degenerate = false; // true when any term was skipped
};

/// H(E, phi) + H(F, phi) + 2 log sup_ij |<phi, E_i F_j phi>| /
/// (<phi, E_i phi><phi, F_j phi>). Terms whose denominator falls below
/// 1e-12 are excluded from the sup and flagged.
PovmSlackResult povm_slack(const Povm& e, const Povm& f, const Vec& phi);

/// sum_k H(A_k, rho) - (n+1) log((n+1)/2) for n+1 pairwise unbiased
/// maximal Abelian observables in dimension n; nonnegative.
double sanchez_slack(const std::vector<ObservableSpec>& observables,
                     const State& s);

}  // namespace qoa
