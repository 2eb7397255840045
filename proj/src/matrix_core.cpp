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

#include "qoa/matrix_core.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <string>

namespace qoa {

Complex hs_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hs_inner: dimension mismatch");
  }
  return (a.adjoint() * b).trace() / static_cast<double>(a.rows());
}

double hs_norm(const Mat& a) {
  return a.norm() / std::sqrt(static_cast<double>(a.rows()));
}

Mat tensor(const Mat& a, const Mat& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  Mat out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i) {
    for (Eigen::Index j = 0; j < ac; ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

const Mat& pauli(int k) {
  static const std::array<Mat, 4> sigma = [] {
    std::array<Mat, 4> s;
    const Complex i(0.0, 1.0);
    s[0] = Mat::Identity(2, 2);
    s[1] = Mat(2, 2);
    s[1] << 0, 1, 1, 0;
    s[2] = Mat(2, 2);
    s[2] << 0, -i, i, 0;
    s[3] = Mat(2, 2);
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(k));
}

Mat pauli2(int i, int j) { return tensor(pauli(i), pauli(j)); }

bool is_unitary(const Mat& m, double eps) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Mat::Identity(m.rows(), m.cols())).norm() <= eps;
}

bool is_hermitian(const Mat& m, double eps) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= eps;
}

bool is_projection(const Mat& m, double eps) {
  return is_hermitian(m, eps) && (m * m - m).norm() <= eps;
}

Mat haar_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Phase fix: without it the QR factorization biases the distribution.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

Vec haar_vector(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

Mat exp_sigma(int k, double theta) {
  if (k < 1 || k > 3) throw std::invalid_argument("exp_sigma: k must be 1..3");
  const Complex i(0.0, 1.0);
  return std::cos(theta) * Mat::Identity(4, 4) +
         i * std::sin(theta) * pauli2(k, k);
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& label,
                          std::uint64_t index) {
  // FNV-1a over (master, label, index).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(master);
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  mix(index);
  return h;
}

}  // namespace qoa
