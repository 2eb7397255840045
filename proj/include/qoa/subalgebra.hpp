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

#include <optional>
#include <vector>

#include "qoa/matrix_core.hpp"

namespace qoa {

enum class StructureTag { kCommutative, kFactor, kGeneral };

/// Unital *-subalgebra of M_n(C), represented by an orthonormal basis
/// under the normalized Hilbert-Schmidt inner product with basis[0] = I.
/// Elements basis[1..] are automatically traceless.
struct OperatorAlgebra {
  int ambient_dim = 0;
  std::vector<Mat> basis;
  StructureTag tag = StructureTag::kGeneral;

  // For factor algebras obtained as w (I_n (x) M_m) w*: the conjugating
  // unitary and the inner dimension m. Used to sample minimal projections.
  std::optional<Mat> conjugator;
  int factor_inner_dim = 0;

  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Smallest unital *-algebra containing the generators. Iterates
/// adjoints and pairwise products with re-orthonormalization until the
/// span stabilizes.
OperatorAlgebra algebra_close(const std::vector<Mat>& generators,
                              StructureTag tag = StructureTag::kGeneral);

/// Builds an algebra directly from a spanning set known to be closed
/// under products and adjoints (I is always adjoined).
OperatorAlgebra algebra_from_span(int ambient_dim, const std::vector<Mat>& span,
                                  StructureTag tag = StructureTag::kGeneral);

/// The algebra C I (x) M_m inside M_{n m}, tagged as a factor.
OperatorAlgebra right_factor(int n, int m);

/// The algebra M_n (x) C I inside M_{n m}, tagged as a factor.
OperatorAlgebra left_factor(int n, int m);

/// Trace-preserving conditional expectation: the Hilbert-Schmidt
/// orthogonal projection E(x) = sum_i <b_i, x> b_i.
Mat conditional_expectation(const OperatorAlgebra& alg, const Mat& x);

/// max |<a, b>| over traceless basis pairs; <= eps iff quasi-orthogonal.
double quasi_orthogonality_defect(const OperatorAlgebra& a1,
                                  const OperatorAlgebra& a2);

/// The four equivalent complementarity conditions for homogeneous pairs:
/// (i) tau(PQ) = tau(P) tau(Q) for minimal projections, (ii) traceless
/// parts orthogonal, (iii) tau factorizes on the algebras, (iv) the
/// conditional expectation collapses the other algebra to scalars.
struct ComplementarityReport {
  std::optional<bool> cond_i;
  double cond_i_defect = 0.0;
  bool cond_ii = false;
  double cond_ii_defect = 0.0;
  bool cond_iii = false;
  double cond_iii_defect = 0.0;
  bool cond_iv = false;
  double cond_iv_defect = 0.0;
  double eps = kDefaultEps;

  bool all_agree() const;
};

ComplementarityReport complementarity_report(const OperatorAlgebra& a1,
                                             const OperatorAlgebra& a2,
                                             int samples = 16,
                                             std::uint64_t seed = 0,
                                             double eps = kDefaultEps);

/// Minimal projections. Commutative: the complete list of joint spectral
/// projections. Factor: a deterministic sample w(I (x) |v><v|)w* over a
/// fixed vector grid plus `samples` seeded random vectors.
std::vector<Mat> minimal_projections(const OperatorAlgebra& alg,
                                     int samples = 0, std::uint64_t seed = 0);

/// True iff all minimal projections share the same normalized trace.
/// Factors are always homogeneous.
bool is_homogeneous(const OperatorAlgebra& alg);

struct SpanningDecomposition {
  std::vector<Mat> components;  // E_i(x) per algebra
  int span_dim = 0;             // rank of the joint span
  bool spanning = false;        // span_dim == ambient_dim^2
  Mat reconstruction;           // -tau(x)(r-1) I + sum_i E_i(x)
};

/// Components of x in a pairwise quasi-orthogonal spanning family:
/// x = -tau(x)(r-1) I + sum_i E_i(x).
SpanningDecomposition spanning_decomposition(
    const std::vector<OperatorAlgebra>& algebras, const Mat& x);

/// Dimension of the linear intersection of the two spans; >= 1 (contains I).
int intersection_dim(const OperatorAlgebra& a1, const OperatorAlgebra& a2);

/// Column-major vectorization scaled so plain dot products match hs_inner.
Vec vectorize(const Mat& m);

/// Orthonormalize `candidates` against `basis` (modified Gram-Schmidt with
/// a re-orthogonalization pass), appending the survivors to `basis`.
/// Rank decisions at `rank_tol` relative threshold.
void extend_orthonormal(std::vector<Mat>& basis, const std::vector<Mat>& candidates,
                        double rank_tol = 1e-8);

}  // namespace qoa
