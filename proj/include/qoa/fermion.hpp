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

#include "qoa/subalgebra.hpp"

namespace qoa {

/// Annihilation operators a_1..a_n on dim 2^n satisfying the canonical
/// anticommutation relations {a_i, a_j} = 0, {a_i, a_j*} = delta_ij I.
struct FermionSystem {
  int n_modes = 0;
  std::vector<Mat> ops;  // ops[i-1] = a_i
};

/// a_i = s3^(x(i-1)) (x) [[0,1],[0,0]] (x) I^(x(n-i)). Modes are 1-based.
/// Guarded at n <= 6 (dim 64).
FermionSystem jordan_wigner(int n);

/// Max CAR-relation residual over all mode pairs.
double car_residual(const FermionSystem& sys);

/// The *-algebra generated by {a_i : i in modes}; dimension 4^|modes|.
OperatorAlgebra mode_subalgebra(const FermionSystem& sys,
                                const std::vector<int>& modes);

/// Quasi-orthogonality defect of the subalgebras generated by the two
/// halves of a full partition of the modes; zero for every partition.
double car_partition_check(const FermionSystem& sys,
                           const std::vector<int>& j1,
                           const std::vector<int>& j2);

/// The 4x4 unitary mapping the one-mode algebra of a_1 onto that of a_2
/// in the two-mode system; its 2x2 blocks form an orthogonal basis.
Mat car_swap_unitary();

}  // namespace qoa
