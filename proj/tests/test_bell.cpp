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

#include "qoa/bell.hpp"
#include "qoa/subalgebra.hpp"

using namespace qoa;

TEST_CASE("bell projections are minimal and sum to identity") {
  BellAlgebra bell = bell_algebra();
  Mat sum = bell.p_plus + bell.p_minus + bell.q_plus + bell.q_minus;
  CHECK((sum - Mat::Identity(4, 4)).norm() < 1e-14);
  for (const Mat& p : {bell.p_plus, bell.p_minus, bell.q_plus, bell.q_minus}) {
    CHECK(is_projection(p, 1e-12));
    CHECK(std::abs(p.trace() - Complex(1.0)) < 1e-12);
  }
  CHECK(bell.algebra.dimension() == 4);
  CHECK(bell.algebra.tag == StructureTag::kCommutative);
  // the projections lie in the algebra
  for (const Mat& p : {bell.p_plus, bell.p_minus, bell.q_plus, bell.q_minus}) {
    CHECK((conditional_expectation(bell.algebra, p) - p).norm() < 1e-12);
  }
}

TEST_CASE("bell projections are the expected word combinations") {
  BellAlgebra bell = bell_algebra();
  Mat p_plus_expect =
      0.25 * (pauli2(0, 0) + pauli2(1, 1) - pauli2(2, 2) + pauli2(3, 3));
  CHECK((bell.p_plus - p_plus_expect).norm() < 1e-12);
  Mat q_plus_expect =
      0.25 * (pauli2(0, 0) + pauli2(1, 1) + pauli2(2, 2) - pauli2(3, 3));
  CHECK((bell.q_plus - q_plus_expect).norm() < 1e-12);
}

TEST_CASE("c-form and kappa round trip") {
  Mat c = bell_c_form({1, 0}, {0.5, 0.5}, {2, 0}, {0, -1});
  auto k = bell_kappa(c);
  CHECK(std::abs(k[0] - Complex(1.5, 0.5)) < 1e-14);
  CHECK(std::abs(k[1] - Complex(0.5, -0.5)) < 1e-14);
  CHECK(std::abs(k[2] - Complex(2.0, -1.0)) < 1e-14);
  CHECK(std::abs(k[3] - Complex(2.0, 1.0)) < 1e-14);
  // the c-form spans exactly the commutant pattern fixed by the
  // expectation
  CHECK((bell_expectation(c) - c).norm() < 1e-12);
}

TEST_CASE("bell expectation annihilates local operators") {
  for (int k = 1; k < 4; ++k) {
    CHECK(bell_expectation(pauli2(0, k)).norm() < 1e-14);
    CHECK(bell_expectation(pauli2(k, 0)).norm() < 1e-14);
  }
  CHECK((bell_expectation(pauli2(0, 0)) - Mat::Identity(4, 4)).norm() < 1e-14);
  // idempotent on a generic matrix
  Mat x = haar_unitary(4, 51);
  Mat e = bell_expectation(x);
  CHECK((bell_expectation(e) - e).norm() < 1e-12);
}

TEST_CASE("bell unitaries and their conjugates") {
  Mat m = bell_unitary(0.3, 1.1, 2.0, 0.7);
  CHECK(is_unitary(m, 1e-12));
  BellDefects d = bell_complementarity_defect(m);
  CHECK(d.vs_bell < 1e-10);
  // the conjugate need not be complementary to the tensor factors;
  // those defects are informational
  CHECK(d.vs_right >= 0.0);
  CHECK(d.vs_left >= 0.0);
}

TEST_CASE("identity phases give the identity unitary") {
  CHECK((bell_unitary(0, 0, 0, 0) - Mat::Identity(4, 4)).norm() < 1e-14);
}

TEST_CASE("defect check rejects non-members") {
  CHECK_THROWS(bell_complementarity_defect(pauli2(0, 1)));
  Mat not_unitary = 0.5 * Mat::Identity(4, 4);
  CHECK_THROWS(bell_complementarity_defect(not_unitary));
}
