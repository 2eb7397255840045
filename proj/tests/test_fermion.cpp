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

#include "qoa/block_unitary.hpp"
#include "qoa/fermion.hpp"

using namespace qoa;

TEST_CASE("jordan wigner satisfies the CAR") {
  for (int n : {1, 2, 3, 4}) {
    FermionSystem sys = jordan_wigner(n);
    CHECK(sys.ops.size() == static_cast<std::size_t>(n));
    CHECK(sys.ops[0].rows() == (1 << n));
    CHECK(car_residual(sys) < 1e-12);
  }
  CHECK_THROWS(jordan_wigner(0));
  CHECK_THROWS(jordan_wigner(7));
}

TEST_CASE("two mode operators match the explicit matrices") {
  FermionSystem sys = jordan_wigner(2);
  Mat lower(2, 2);
  lower << 0, 1, 0, 0;
  CHECK((sys.ops[0] - tensor(lower, Mat::Identity(2, 2))).norm() < 1e-14);
  CHECK((sys.ops[1] - tensor(pauli(3), lower)).norm() < 1e-14);
}

TEST_CASE("mode subalgebras have dimension 4^k") {
  FermionSystem sys = jordan_wigner(3);
  CHECK(mode_subalgebra(sys, {1}).dimension() == 4);
  CHECK(mode_subalgebra(sys, {2}).dimension() == 4);
  CHECK(mode_subalgebra(sys, {1, 3}).dimension() == 16);
}

TEST_CASE("single mode algebra is the expected block pattern") {
  // the algebra of a_1 in two modes acts trivially on the second tensor
  // slot: it is M_2 (x) C I
  FermionSystem sys = jordan_wigner(2);
  OperatorAlgebra alg = mode_subalgebra(sys, {1});
  Mat probe = tensor(haar_unitary(2, 13), Mat::Identity(2, 2));
  CHECK((conditional_expectation(alg, probe) - probe).norm() < 1e-10);
}

TEST_CASE("partitions give complementary halves") {
  FermionSystem two = jordan_wigner(2);
  CHECK(car_partition_check(two, {1}, {2}) < 1e-10);
  FermionSystem three = jordan_wigner(3);
  CHECK(car_partition_check(three, {1}, {2, 3}) < 1e-10);
  CHECK(car_partition_check(three, {1, 3}, {2}) < 1e-10);
  FermionSystem four = jordan_wigner(4);
  CHECK(car_partition_check(four, {1, 2}, {3, 4}) < 1e-10);
  CHECK(car_partition_check(four, {1, 4}, {2, 3}) < 1e-10);
}

TEST_CASE("partition validation") {
  FermionSystem three = jordan_wigner(3);
  CHECK_THROWS(car_partition_check(three, {1}, {2}));        // incomplete
  CHECK_THROWS(car_partition_check(three, {1, 2}, {2, 3}));  // overlap
  CHECK_THROWS(car_partition_check(three, {1, 2}, {3, 4}));  // out of range
}

TEST_CASE("swap unitary exchanges the mode algebras") {
  FermionSystem sys = jordan_wigner(2);
  Mat v = car_swap_unitary();
  CHECK(is_unitary(v, 1e-12));
  CHECK((v * sys.ops[0] * v.adjoint() - sys.ops[1]).norm() < 1e-12);
  CHECK(usefulness_defect(v, 2, 2) < 1e-10);
}
