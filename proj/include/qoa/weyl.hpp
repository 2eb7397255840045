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

#include <utility>
#include <vector>

#include "qoa/matrix_core.hpp"

namespace qoa {

/// Clock/shift pair on C^n: x permutes the standard basis cyclically
/// (x e_i = e_{i+1}), z = diag(1, q, ..., q^{n-1}) with q = e^{2 pi i / n}.
/// They satisfy z^k x^l = q^{kl} x^l z^k.
struct WeylSystem {
  int n;
  Complex q;
  Mat x;
  Mat z;
};

/// Orthonormal basis of C^n, stored as columns of an n x n unitary.
struct Basis {
  int n;
  Mat vectors;  // column j is the j-th basis vector

  Vec vector(int j) const { return vectors.col(j); }
};

WeylSystem weyl_system(int n);

/// S_{j,k} = sum_m q^{mj} |e_m><e_{m+k}| (indices mod n).
/// Satisfies S_{j,k} S_{u,v} = q^{ku} S_{j+u,k+v} and Tr S_{j,k} = 0
/// for (j,k) != (0,0).
Mat weyl_s(const WeylSystem& sys, int j, int k);

using IndexPair = std::pair<int, int>;
using IndexClass = std::vector<IndexPair>;

/// Partition of the p^2-1 nonzero index pairs of Z_p x Z_p into the p+1
/// punctured lines through the origin, each of size p-1. Within a class
/// all pairs satisfy ku = jv mod p, so the S operators commute.
std::vector<IndexClass> commuting_classes_prime(int p);

/// Joint eigenbasis of the commuting family {S_{j,k} : (j,k) in cls}.
/// Deterministic: eigenvalues are sorted by phase angle, degenerate
/// eigenspaces are refined by the next generator.
Basis eigenbasis_of_class(const WeylSystem& sys, const IndexClass& cls);

/// Joint eigenbasis of a commuting family of normal matrices.
Basis joint_eigenbasis(const std::vector<Mat>& family, int dim);

/// max over (j,k) of | |<e_j, f_k>|^2 - 1/n |; zero iff mutually unbiased.
double unbiasedness_deviation(const Basis& b1, const Basis& b2);

/// All p+1 mutually unbiased bases from the prime-dimension construction.
std::vector<Basis> mub_prime(int p);

/// The five commuting Pauli triples partitioning the 15 nonidentity
/// sigma_i (x) sigma_j words; index pairs (i,j) per triple.
std::vector<std::vector<IndexPair>> pauli_partition_triples();

/// The five mutually unbiased bases of dimension 4 obtained as joint
/// eigenbases of the Pauli triples.
std::vector<Basis> pauli_partition_dim4();

}  // namespace qoa
