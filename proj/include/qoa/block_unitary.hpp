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

#include <cstdint>
#include <string>
#include <vector>

#include "qoa/subalgebra.hpp"

namespace qoa {

/// Unitary on C^n (x) C^m viewed as an n x n grid of m x m blocks,
/// w = sum_ij E_ij (x) blocks[i][j].
struct BlockUnitary {
  int n = 0;
  int m = 0;
  Mat w;
  std::vector<std::vector<Mat>> blocks;
};

BlockUnitary split_blocks(const Mat& w, int n, int m,
                          double eps = kDefaultEps);

/// Frobenius distance between (m/n) sum_ij |W_ij><W_ij| and the identity
/// superoperator on M_m. Zero iff w(C I (x) M_m)w* is complementary to
/// C I (x) M_m; for n = m, zero iff the blocks are an orthonormal basis
/// of M_m under the trace inner product.
double usefulness_defect(const BlockUnitary& bu);
double usefulness_defect(const Mat& w, int n, int m);

/// The factor algebra w(C I (x) M_m)w*, with w stored as conjugator.
OperatorAlgebra conjugated_algebra(const Mat& w, int n, int m,
                                   double eps = kDefaultEps);

/// Clock/shift block construction: blocks W_ij = c_ij X^{i+1} Z^{j+1}
/// (exponents mod n) for a unitary coefficient matrix c with
/// n |c_ij|^2 = 1. The result is unitary with usefulness defect zero.
BlockUnitary weyl_block_unitary(int n, const Mat& c);

/// True iff w and w* agree on usefulness (both within eps or both not).
bool adjoint_closure_check(const Mat& w, int n, int m,
                           double eps = kDefaultEps);

/// Intertwiner for an anticommuting, multiplicatively closed triple of
/// 4x4 Pauli words (a1, a2, a3): returns unitary u with
/// u (I (x) sigma_k) u* = a_k for k = 1, 3 (and the k = 2 image inside
/// the spanned algebra).
Mat pauli_triplet_unitary(const Mat& a1, const Mat& a3);

enum class FamilyStrategy { kPauliTriplet, kCartanRandom };

FamilyStrategy family_strategy_from_string(const std::string& s);

/// Pairwise complementary conjugates of C I (x) M_n inside M_{n^2}:
/// members[0] = I and members[j]^* members[i] is useful for i > j, so
/// the algebras members[i] (C I (x) M_n) members[i]^* are pairwise
/// quasi-orthogonal.
struct Family {
  std::vector<Mat> members;
  std::vector<OperatorAlgebra> algebras;
  double max_pair_defect = 0.0;
};

struct FamilySearchResult {
  bool success = false;
  Family family;  // best family found (the answer on success)
  std::int64_t trials = 0;
};

FamilySearchResult family_search(int n, int k, FamilyStrategy strategy,
                                 std::uint64_t seed, std::int64_t budget,
                                 double eps = kDefaultEps);

}  // namespace qoa
