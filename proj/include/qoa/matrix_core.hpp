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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

namespace qoa {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kDefaultEps = 1e-10;

/// Absolute tolerance for all matrix predicates and defect verdicts.
struct Tolerance {
  double eps = kDefaultEps;
};

/// Normalized-trace Hilbert-Schmidt inner product tau(a* b) = Tr(a* b)/dim.
/// Conjugate-linear in the first argument.
Complex hs_inner(const Mat& a, const Mat& b);

/// Frobenius norm scaled by the normalized trace, sqrt(tau(a* a)).
double hs_norm(const Mat& a);

/// Kronecker product; dim = a.dim * b.dim.
Mat tensor(const Mat& a, const Mat& b);

/// Pauli matrix sigma_k, k in 0..3 (sigma_0 = I).
const Mat& pauli(int k);

/// sigma_i (x) sigma_j, 4x4.
Mat pauli2(int i, int j);

bool is_unitary(const Mat& m, double eps = kDefaultEps);
bool is_hermitian(const Mat& m, double eps = kDefaultEps);
bool is_projection(const Mat& m, double eps = kDefaultEps);

/// Haar-distributed random unitary, deterministic in (dim, seed).
/// Ginibre sample, QR, then the R-diagonal phase correction.
Mat haar_unitary(int dim, std::uint64_t seed);

/// Haar-random unit vector, deterministic in (dim, seed).
Vec haar_vector(int dim, std::uint64_t seed);

/// exp(i theta sigma_k (x) sigma_k) = cos(theta) I + i sin(theta) sigma_k (x) sigma_k.
/// Closed form; valid because (sigma_k (x) sigma_k)^2 = I.
Mat exp_sigma(int k, double theta);

/// Derives an independent seed stream from a master seed and a label.
/// Used so each subcommand / trial draws from its own stream.
std::uint64_t derive_seed(std::uint64_t master, const std::string& label,
                          std::uint64_t index = 0);

}  // namespace qoa
