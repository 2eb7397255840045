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

#include "qoa/cartan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qoa/block_unitary.hpp"

namespace qoa {

namespace {

// Distance of v to the lattice pi/4 + k pi/2.
double quarter_distance(double v) {
  const double half = std::numbers::pi / 2.0;
  double r = std::remainder(v - std::numbers::pi / 4.0, half);
  return std::abs(r);
}

}  // namespace

Mat cartan_n(const CartanParams& p) {
  return exp_sigma(1, p.alpha) * exp_sigma(2, p.beta) * exp_sigma(3, p.gamma);
}

CartanCoeffs cartan_coeffs(const CartanParams& p) {
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double cg = std::cos(p.gamma), sg = std::sin(p.gamma);
  const Complex i(0.0, 1.0);
  CartanCoeffs c;
  c.c0 = ca * cb * cg + i * sa * sb * sg;
  c.c1 = ca * sb * sg + i * sa * cb * cg;
  c.c2 = sa * cb * sg + i * ca * sb * cg;
  c.c3 = sa * sb * cg + i * ca * cb * sg;
  return c;
}

CartanClass classify(const CartanParams& p, double tol) {
  const bool a = quarter_distance(p.alpha) <= tol;
  const bool b = quarter_distance(p.beta) <= tol;
  const bool g = quarter_distance(p.gamma) <= tol;
  if (b && g) return CartanClass::kN1;
  if (a && g) return CartanClass::kN2;
  if (a && b) return CartanClass::kN3;
  return CartanClass::kNone;
}

std::array<PauliImage, 3> pauli_triplet(const Mat& w, double eps) {
  if (w.rows() != 4 || w.cols() != 4 || !is_unitary(w, 1e-9)) {
    throw std::invalid_argument("pauli_triplet: w must be a 4x4 unitary");
  }
  std::array<PauliImage, 3> out;
  for (int k = 1; k <= 3; ++k) {
    PauliImage& img = out[k - 1];
    img.image = w * pauli2(0, k) * w.adjoint();
    int support = 0;
    PauliWord last;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        Complex c = hs_inner(pauli2(i, j), img.image);
        img.coords(i, j) = c;
        if (std::abs(c) > eps) {
          ++support;
          last = PauliWord{i, j, c.real() >= 0 ? 1.0 : -1.0};
          // A single signed word means the coefficient is +/- 1.
          if (std::abs(std::abs(c.real()) - 1.0) > eps ||
              std::abs(c.imag()) > eps) {
            support = 99;
          }
        }
      }
    }
    if (support == 1) img.word = last;
  }
  return out;
}

LemmaSignResult lemma_sign_check(const CartanParams& p) {
  LemmaSignResult res;
  res.cls = classify(p);
  if (res.cls == CartanClass::kNone) {
    throw std::invalid_argument("lemma_sign_check: parameters not in any class");
  }
  const int i = res.cls == CartanClass::kN1 ? 1
              : res.cls == CartanClass::kN2 ? 2
                                            : 3;
  const Mat n = cartan_n(p);
  const Mat image = n * pauli2(0, i) * n.adjoint();
  const Mat target = pauli2(i, 0);
  const double plus = (image - target).norm();
  const double minus = (image + target).norm();
  res.sign = plus <= minus ? 1 : -1;
  res.residual = std::min(plus, minus);
  res.holds = res.residual <= 1e-9;
  return res;
}

IntersectionCheck intersection_theorem_check(const Mat& l1, const Mat& l2,
                                             const CartanParams& p) {
  const CartanClass cls = classify(p);
  if (cls == CartanClass::kNone) {
    throw std::invalid_argument(
        "intersection_theorem_check: parameters not in any class");
  }
  if (!is_unitary(l1, 1e-9) || !is_unitary(l2, 1e-9) || l1.rows() != 2 ||
      l2.rows() != 2) {
    throw std::invalid_argument(
        "intersection_theorem_check: l1, l2 must be 2x2 unitaries");
  }
  const int i = cls == CartanClass::kN1 ? 1 : cls == CartanClass::kN2 ? 2 : 3;
  const Mat w = tensor(l1, l2) * cartan_n(p);
  OperatorAlgebra conj = conjugated_algebra(w, 2, 2);
  OperatorAlgebra left = left_factor(2, 2);

  IntersectionCheck out;
  out.dim = intersection_dim(conj, left);
  const Mat witness = tensor(l1 * pauli(i) * l1.adjoint(), Mat::Identity(2, 2));
  const Mat residual = witness - conditional_expectation(conj, witness);
  out.witness_residual = hs_norm(residual);
  out.witness_in_algebra = out.witness_residual <= 1e-9;
  return out;
}

std::array<std::array<std::pair<int, int>, 3>, 4> four_family_triplets() {
  using P = std::pair<int, int>;
  return {{
      {P{0, 1}, P{1, 3}, P{1, 2}},
      {P{3, 1}, P{1, 1}, P{2, 0}},
      {P{1, 0}, P{2, 2}, P{3, 2}},
      {P{0, 2}, P{2, 3}, P{2, 1}},
  }};
}

FourFamily four_family_dim4() {
  FourFamily fam;
  for (const auto& triple : four_family_triplets()) {
    std::vector<Mat> span;
    for (const auto& [i, j] : triple) span.push_back(pauli2(i, j));
    OperatorAlgebra alg = algebra_from_span(4, span, StructureTag::kFactor);
    alg.conjugator = pauli_triplet_unitary(pauli2(triple[0].first, triple[0].second),
                                           pauli2(triple[2].first, triple[2].second));
    alg.factor_inner_dim = 2;
    fam.factors.push_back(std::move(alg));
  }
  fam.complement = algebra_from_span(
      4, {pauli2(0, 3), pauli2(3, 0), pauli2(3, 3)}, StructureTag::kCommutative);
  return fam;
}

}  // namespace qoa
