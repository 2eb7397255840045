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

#include <array>
#include <optional>
#include <tuple>

#include "qoa/subalgebra.hpp"

namespace qoa {

/// Parameters of the canonical two-qubit interaction
/// N = exp(i a s1 x s1) exp(i b s2 x s2) exp(i c s3 x s3).
struct CartanParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Coefficients of N = sum_i c_i sigma_i (x) sigma_i; sum |c_i|^2 = 1.
struct CartanCoeffs {
  Complex c0, c1, c2, c3;
};

enum class CartanClass { kN1, kN2, kN3, kNone };

/// The 4x4 unitary product of the three closed-form exponentials.
Mat cartan_n(const CartanParams& p);

/// Closed-form coefficients:
///   c0 = cos a cos b cos g + i sin a sin b sin g
///   c1 = cos a sin b sin g + i sin a cos b cos g
///   c2 = sin a cos b sin g + i cos a sin b cos g
///   c3 = sin a sin b cos g + i cos a cos b sin g
CartanCoeffs cartan_coeffs(const CartanParams& p);

/// N_i when the two values other than the i-th are pi/4 mod pi/2 within
/// `tol` radians. Membership in any class is equivalent to all
/// |c_i|^2 = 1/4 and to usefulness of cartan_n(p).
CartanClass classify(const CartanParams& p, double tol = 1e-9);

/// A single signed Pauli tensor word s * sigma_i (x) sigma_j.
struct PauliWord {
  int i = 0;
  int j = 0;
  double sign = 1.0;
};

/// Expansion of w (I (x) sigma_k) w* in the sigma_i (x) sigma_j basis.
struct PauliImage {
  Mat image;
  Eigen::Matrix4cd coords;             // coords(i, j) over the word basis
  std::optional<PauliWord> word;       // set when the image is one signed word
};

/// Images of I (x) sigma_k under conjugation by a 4x4 unitary, k = 1..3.
std::array<PauliImage, 3> pauli_triplet(const Mat& w, double eps = 1e-9);

struct LemmaSignResult {
  CartanClass cls = CartanClass::kNone;
  bool holds = false;
  int sign = 0;       // N(I (x) s_i)N* = sign * s_i (x) I
  double residual = 0.0;
};

/// Checks N(I (x) sigma_i)N* = +/- sigma_i (x) I for the class index i.
LemmaSignResult lemma_sign_check(const CartanParams& p);

struct IntersectionCheck {
  int dim = 0;                   // intersection with M_2 (x) C I
  bool witness_in_algebra = false;  // L1 sigma_i L1* (x) I lies in the conjugate
  double witness_residual = 0.0;
};

/// Builds (L1 (x) L2) N (C I (x) M_2) N* (L1 (x) L2)* and intersects it
/// with M_2 (x) C I; the dimension is always >= 2 for classifiable p.
IntersectionCheck intersection_theorem_check(const Mat& l1, const Mat& l2,
                                             const CartanParams& p);

/// Four pairwise quasi-orthogonal factor subalgebras of M_4 spanned by
/// Pauli triplets, plus the commutative complement
/// span{I, s0 x s3, s3 x s0, s3 x s3}; joint span is all of M_4.
struct FourFamily {
  std::vector<OperatorAlgebra> factors;
  OperatorAlgebra complement;
};

/// The index pairs of the four factor triplets.
std::array<std::array<std::pair<int, int>, 3>, 4> four_family_triplets();

FourFamily four_family_dim4();

}  // namespace qoa
