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

#include "qoa/block_unitary.hpp"
#include "qoa/subalgebra.hpp"
#include "qoa/weyl.hpp"

using namespace qoa;

namespace {

Mat named_w() {
  // (1/sqrt2) [[I, s3], [s1, i s2]]
  const Complex i(0, 1);
  Mat w(4, 4);
  w.block(0, 0, 2, 2) = pauli(0);
  w.block(0, 2, 2, 2) = pauli(3);
  w.block(2, 0, 2, 2) = pauli(1);
  w.block(2, 2, 2, 2) = i * pauli(2);
  return w / std::sqrt(2.0);
}

Mat named_w2() {
  // (1/sqrt2) [[-i s2, s1], [s3, -I]]: the clock/shift block form with
  // coefficient matrix (1/sqrt2) [[1, 1], [1, -1]]
  const Complex i(0, 1);
  Mat w(4, 4);
  w.block(0, 0, 2, 2) = -i * pauli(2);
  w.block(0, 2, 2, 2) = pauli(1);
  w.block(2, 0, 2, 2) = pauli(3);
  w.block(2, 2, 2, 2) = -pauli(0);
  return w / std::sqrt(2.0);
}

Mat named_u() {
  // permutation swapping the middle basis vectors
  Mat u = Mat::Zero(4, 4);
  u(0, 0) = u(1, 2) = u(2, 1) = u(3, 3) = 1.0;
  return u;
}

}  // namespace

TEST_CASE("split_blocks round trip") {
  Mat w = haar_unitary(6, 3);
  BlockUnitary bu = split_blocks(w, 2, 3);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK((bu.blocks[i][j] - w.block(3 * i, 3 * j, 3, 3)).norm() < 1e-14);
    }
  }
  CHECK_THROWS(split_blocks(Mat::Zero(4, 4), 2, 2));
}

TEST_CASE("named block unitaries are useful") {
  CHECK(usefulness_defect(named_w(), 2, 2) < 1e-10);
  CHECK(usefulness_defect(named_w2(), 2, 2) < 1e-10);
  CHECK(usefulness_defect(named_u(), 2, 2) < 1e-10);
}

TEST_CASE("usefulness equals complementarity of the conjugate") {
  // Oracle: the frame condition is equivalent to quasi-orthogonality of
  // w (C I (x) M_2) w* against C I (x) M_2; check both sides agree.
  OperatorAlgebra base = right_factor(2, 2);
  for (std::uint64_t s : {4u, 5u, 6u}) {
    Mat w = haar_unitary(4, s);
    const double defect = usefulness_defect(w, 2, 2);
    const double qdefect =
        quasi_orthogonality_defect(conjugated_algebra(w, 2, 2), base);
    CHECK(((defect < 1e-10) == (qdefect < 1e-10)));
  }
  Mat w = named_w();
  CHECK(quasi_orthogonality_defect(conjugated_algebra(w, 2, 2), base) < 1e-10);
}

TEST_CASE("identity is not useful") {
  CHECK(usefulness_defect(Mat::Identity(4, 4), 2, 2) > 0.5);
}

TEST_CASE("haar random unitaries are not useful") {
  for (int t = 0; t < 20; ++t) {
    Mat w = haar_unitary(4, derive_seed(1, "bu-haar", t));
    CHECK(usefulness_defect(w, 2, 2) > 1e-3);
    CHECK(adjoint_closure_check(w, 2, 2));
  }
}

TEST_CASE("weyl block construction") {
  for (int n : {2, 3, 4}) {
    Mat c(n, n);
    const Complex i(0, 1);
    const Complex q = std::exp(2.0 * std::numbers::pi * i / double(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) c(a, b) = std::pow(q, a * b);
    }
    c /= std::sqrt(double(n));
    BlockUnitary bu = weyl_block_unitary(n, c);
    CHECK(is_unitary(bu.w, 1e-9));
    CHECK(usefulness_defect(bu) < 1e-10);
  }
}

TEST_CASE("weyl block construction reproduces the named 2x2 form") {
  Mat c(2, 2);
  c << 1, 1, 1, -1;
  c /= std::sqrt(2.0);
  BlockUnitary bu = weyl_block_unitary(2, c);
  CHECK((bu.w - named_w2()).norm() < 1e-12);
}

TEST_CASE("pauli triplet intertwiner") {
  // anticommuting closed triple s1 x s0, s2 x s3, s3 x s3
  Mat u = pauli_triplet_unitary(pauli2(1, 0), pauli2(3, 3));
  CHECK(is_unitary(u, 1e-10));
  CHECK((u * pauli2(0, 1) * u.adjoint() - pauli2(1, 0)).norm() < 1e-10);
  CHECK((u * pauli2(0, 3) * u.adjoint() - pauli2(3, 3)).norm() < 1e-10);
  CHECK(usefulness_defect(u, 2, 2) < 1e-10);
}

TEST_CASE("family search finds three members quickly") {
  FamilySearchResult r =
      family_search(2, 3, FamilyStrategy::kPauliTriplet, 7, 1000);
  REQUIRE(r.success);
  CHECK(r.family.members.size() == 3);
  CHECK(r.family.max_pair_defect < 1e-10);
  CHECK((r.family.members[0] - Mat::Identity(4, 4)).norm() < 1e-12);
  // pairwise usefulness of relative unitaries
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      Mat rel = r.family.members[b].adjoint() * r.family.members[a];
      CHECK(usefulness_defect(rel, 2, 2) < 1e-9);
    }
  }
}

TEST_CASE("family search is deterministic per seed") {
  FamilySearchResult a =
      family_search(2, 3, FamilyStrategy::kPauliTriplet, 7, 1000);
  FamilySearchResult b =
      family_search(2, 3, FamilyStrategy::kPauliTriplet, 7, 1000);
  REQUIRE(a.success);
  REQUIRE(b.success);
  for (std::size_t i = 0; i < a.family.members.size(); ++i) {
    CHECK((a.family.members[i] - b.family.members[i]).norm() == 0.0);
  }
}

TEST_CASE("strategy parsing") {
  CHECK(family_strategy_from_string("pauli-triplet") ==
        FamilyStrategy::kPauliTriplet);
  CHECK(family_strategy_from_string("cartan-random") ==
        FamilyStrategy::kCartanRandom);
  CHECK_THROWS(family_strategy_from_string("nope"));
}
