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

#include "qoa/bell.hpp"

#include <cmath>
#include <stdexcept>

#include "qoa/block_unitary.hpp"

namespace qoa {

namespace {

Mat bell_projection(int offset, double sign) {
  // offset 0: outer corners (P+-); offset 1: inner block (Q+-).
  Mat p = Mat::Zero(4, 4);
  const int a = offset, b = 3 - offset;
  p(a, a) = p(b, b) = 0.5;
  p(a, b) = p(b, a) = sign * 0.5;
  return p;
}

}  // namespace

BellAlgebra bell_algebra() {
  BellAlgebra bell;
  bell.p_plus = bell_projection(0, 1.0);
  bell.p_minus = bell_projection(0, -1.0);
  bell.q_plus = bell_projection(1, 1.0);
  bell.q_minus = bell_projection(1, -1.0);
  bell.algebra = algebra_from_span(
      4, {pauli2(1, 1), pauli2(2, 2), pauli2(3, 3)}, StructureTag::kCommutative);
  return bell;
}

Mat bell_c_form(Complex a, Complex b, Complex c, Complex d) {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(3, 3) = a;
  m(0, 3) = m(3, 0) = b;
  m(1, 1) = m(2, 2) = c;
  m(1, 2) = m(2, 1) = d;
  return m;
}

std::array<Complex, 4> bell_kappa(const Mat& c) {
  if (c.rows() != 4 || c.cols() != 4) {
    throw std::invalid_argument("bell_kappa: expected a 4x4 matrix");
  }
  const Complex a = c(0, 0), b = c(0, 3), cc = c(1, 1), d = c(1, 2);
  return {a + b, a - b, cc + d, cc - d};
}

Mat bell_expectation(const Mat& x) {
  if (x.rows() != 4 || x.cols() != 4) {
    throw std::invalid_argument("bell_expectation: expected a 4x4 matrix");
  }
  Mat e = Mat::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    Mat word = pauli2(i, i);
    e += hs_inner(word, x) * word;
  }
  return e;
}

Mat bell_unitary(double t1, double t2, double t3, double t4) {
  BellAlgebra bell = bell_algebra();
  const Complex i(0.0, 1.0);
  return std::exp(i * t1) * bell.p_plus + std::exp(i * t2) * bell.p_minus +
         std::exp(i * t3) * bell.q_plus + std::exp(i * t4) * bell.q_minus;
}

BellDefects bell_complementarity_defect(const Mat& m, double eps) {
  if (!is_unitary(m, eps)) {
    throw std::invalid_argument("bell_complementarity_defect: m is not unitary");
  }
  if ((bell_expectation(m) - m).norm() > eps) {
    throw std::invalid_argument(
        "bell_complementarity_defect: m is not in the Bell algebra");
  }
  OperatorAlgebra conj = conjugated_algebra(m, 2, 2);
  BellDefects out;
  out.vs_bell = quasi_orthogonality_defect(conj, bell_algebra().algebra);
  out.vs_right = quasi_orthogonality_defect(conj, right_factor(2, 2));
  out.vs_left = quasi_orthogonality_defect(conj, left_factor(2, 2));
  return out;
}

}  // namespace qoa
