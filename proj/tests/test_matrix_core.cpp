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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qoa/matrix_core.hpp"

using namespace qoa;

TEST_CASE("hs_inner normalization") {
  Mat id = Mat::Identity(3, 3);
  CHECK(hs_inner(id, id).real() == doctest::Approx(1.0));
  CHECK(hs_norm(id) == doctest::Approx(1.0));
  // Pauli matrices are an orthonormal set in M_2.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      CHECK(std::abs(hs_inner(pauli(i), pauli(j)) - Complex(expect)) < 1e-14);
    }
  }
}

TEST_CASE("tensor matches hand-computed kronecker") {
  Mat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Mat k = tensor(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1));
  CHECK(k(0, 0) == Complex(0));
  CHECK(k(2, 1) == Complex(3));
  CHECK(k(3, 2) == Complex(4));
}

TEST_CASE("pauli algebra relations") {
  const Complex i(0, 1);
  CHECK((pauli(1) * pauli(2) - i * pauli(3)).norm() < 1e-14);
  CHECK((pauli(2) * pauli(3) - i * pauli(1)).norm() < 1e-14);
  CHECK((pauli(1) * pauli(2) + pauli(2) * pauli(1)).norm() < 1e-14);
  for (int k = 1; k < 4; ++k) {
    CHECK((pauli(k) * pauli(k) - pauli(0)).norm() < 1e-14);
    CHECK(is_hermitian(pauli(k)));
    CHECK(is_unitary(pauli(k)));
  }
  CHECK((pauli2(1, 2) - tensor(pauli(1), pauli(2))).norm() < 1e-14);
}

TEST_CASE("haar_unitary is unitary and deterministic") {
  for (int dim : {2, 3, 5}) {
    Mat u = haar_unitary(dim, 42);
    CHECK(is_unitary(u, 1e-12));
    CHECK((u - haar_unitary(dim, 42)).norm() == 0.0);
    CHECK((u - haar_unitary(dim, 43)).norm() > 1e-3);
  }
}

TEST_CASE("haar first moment") {
  // Oracle: E |u_00|^2 = 1/dim for Haar measure. Monte Carlo over seeds.
  const int dim = 2, trials = 10000;
  double acc = 0.0;
  for (int t = 0; t < trials; ++t) {
    acc += std::norm(haar_unitary(dim, derive_seed(9, "haar-moment", t))(0, 0));
  }
  CHECK(acc / trials == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("haar_vector is normalized") {
  Vec v = haar_vector(4, 7);
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK((v - haar_vector(4, 7)).norm() == 0.0);
}

TEST_CASE("exp_sigma closed form vs series") {
  const double theta = 0.37;
  for (int k = 1; k <= 3; ++k) {
    // Oracle: matrix exponential via diagonalization of the hermitian
    // generator, independent of the closed form.
    Mat g = pauli2(k, k);
    Eigen::SelfAdjointEigenSolver<Mat> es(g);
    Mat d = Mat::Zero(4, 4);
    const Complex i(0, 1);
    for (int r = 0; r < 4; ++r) {
      d(r, r) = std::exp(i * theta * es.eigenvalues()(r));
    }
    Mat expect = es.eigenvectors() * d * es.eigenvectors().adjoint();
    CHECK((exp_sigma(k, theta) - expect).norm() < 1e-12);
  }
  CHECK((exp_sigma(1, 0.0) - Mat::Identity(4, 4)).norm() < 1e-15);
}

TEST_CASE("derive_seed separates streams") {
  CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
  CHECK(derive_seed(1, "a", 0) != derive_seed(1, "a", 1));
  CHECK(derive_seed(1, "a", 5) == derive_seed(1, "a", 5));
  CHECK(derive_seed(2, "a") != derive_seed(1, "a"));
}

TEST_CASE("projection predicate") {
  Mat p = Mat::Zero(2, 2);
  p(0, 0) = 1;
  CHECK(is_projection(p));
  Mat half = 0.5 * Mat::Identity(2, 2);
  CHECK(!is_projection(half));
}
