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

#include "qoa/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qoa {

namespace {

constexpr double kEigCluster = 1e-8;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

double phase_angle(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

// Rotate each column so its largest-magnitude entry is real positive.
void fix_column_phases(Mat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    Eigen::Index imax = 0;
    m.col(j).cwiseAbs().maxCoeff(&imax);
    Complex pivot = m(imax, j);
    if (std::abs(pivot) > 0) m.col(j) *= std::conj(pivot) / std::abs(pivot);
  }
}

Mat orthonormal_columns(const Mat& w) {
  Eigen::HouseholderQR<Mat> qr(w);
  return qr.householderQ() * Mat::Identity(w.rows(), w.cols());
}

}  // namespace

WeylSystem weyl_system(int n) {
  if (n < 2) throw std::invalid_argument("weyl_system: n must be >= 2");
  const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / n);
  Mat x = Mat::Zero(n, n);
  Mat z = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    x((i + 1) % n, i) = 1.0;  // x e_i = e_{i+1}
    z(i, i) = std::pow(q, i);
  }
  return {n, q, x, z};
}

Mat weyl_s(const WeylSystem& sys, int j, int k) {
  const int n = sys.n;
  j = ((j % n) + n) % n;
  k = ((k % n) + n) % n;
  Mat s = Mat::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    s(m, (m + k) % n) = std::pow(sys.q, m * j);
  }
  return s;
}

std::vector<IndexClass> commuting_classes_prime(int p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("commuting_classes_prime: p must be prime");
  }
  std::vector<IndexClass> classes;
  // Directions (0,1) and (1,t); each punctured line has p-1 points.
  auto line = [p](int j0, int k0) {
    IndexClass c;
    for (int m = 1; m < p; ++m) c.emplace_back((m * j0) % p, (m * k0) % p);
    return c;
  };
  classes.push_back(line(0, 1));
  for (int t = 0; t < p; ++t) classes.push_back(line(1, t));
  return classes;
}

Basis joint_eigenbasis(const std::vector<Mat>& family, int dim) {
  std::vector<Mat> subspaces{Mat::Identity(dim, dim)};
  for (const Mat& s : family) {
    std::vector<Mat> refined;
    for (const Mat& v : subspaces) {
      if (v.cols() == 1) {
        refined.push_back(v);
        continue;
      }
      Mat restricted = v.adjoint() * s * v;
      Eigen::ComplexEigenSolver<Mat> es(restricted);
      if (es.info() != Eigen::Success) {
        throw std::runtime_error("joint_eigenbasis: eigensolver failed");
      }
      std::vector<Eigen::Index> order(static_cast<std::size_t>(restricted.cols()));
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
      std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return phase_angle(es.eigenvalues()(a)) < phase_angle(es.eigenvalues()(b));
      });
      // Cluster eigenvalues; the 0 / 2pi phase seam is handled by merging
      // on complex distance, not on angle.
      std::vector<std::vector<Eigen::Index>> groups;
      for (Eigen::Index idx : order) {
        if (!groups.empty() &&
            std::abs(es.eigenvalues()(groups.back().back()) -
                     es.eigenvalues()(idx)) < kEigCluster) {
          groups.back().push_back(idx);
        } else {
          groups.push_back({idx});
        }
      }
      if (groups.size() > 1 &&
          std::abs(es.eigenvalues()(groups.front().front()) -
                   es.eigenvalues()(groups.back().back())) < kEigCluster) {
        for (Eigen::Index idx : groups.back()) groups.front().push_back(idx);
        groups.pop_back();
      }
      for (const auto& g : groups) {
        Mat cols(restricted.rows(), static_cast<Eigen::Index>(g.size()));
        for (std::size_t c = 0; c < g.size(); ++c) {
          cols.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(g[c]);
        }
        refined.push_back(orthonormal_columns(v * cols));
      }
    }
    subspaces = std::move(refined);
  }
  Mat vectors(dim, dim);
  Eigen::Index col = 0;
  for (const Mat& v : subspaces) {
    vectors.block(0, col, dim, v.cols()) = v;
    col += v.cols();
  }
  if (col != dim) throw std::runtime_error("joint_eigenbasis: lost dimensions");
  fix_column_phases(vectors);
  return {dim, vectors};
}

Basis eigenbasis_of_class(const WeylSystem& sys, const IndexClass& cls) {
  std::vector<Mat> family;
  family.reserve(cls.size());
  for (const auto& [j, k] : cls) family.push_back(weyl_s(sys, j, k));
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if ((family[a] * family[b] - family[b] * family[a]).norm() > 1e-9) {
        throw std::invalid_argument("eigenbasis_of_class: class does not commute");
      }
    }
  }
  return joint_eigenbasis(family, sys.n);
}

double unbiasedness_deviation(const Basis& b1, const Basis& b2) {
  if (b1.n != b2.n) {
    throw std::invalid_argument("unbiasedness_deviation: dimension mismatch");
  }
  const double target = 1.0 / b1.n;
  Mat overlap = b1.vectors.adjoint() * b2.vectors;
  double dev = 0.0;
  for (Eigen::Index i = 0; i < overlap.rows(); ++i) {
    for (Eigen::Index j = 0; j < overlap.cols(); ++j) {
      dev = std::max(dev, std::abs(std::norm(overlap(i, j)) - target));
    }
  }
  return dev;
}

std::vector<Basis> mub_prime(int p) {
  WeylSystem sys = weyl_system(p);
  std::vector<Basis> bases;
  for (const IndexClass& cls : commuting_classes_prime(p)) {
    bases.push_back(eigenbasis_of_class(sys, cls));
  }
  return bases;
}

std::vector<std::vector<IndexPair>> pauli_partition_triples() {
  return {
      {{0, 1}, {1, 0}, {1, 1}},
      {{0, 2}, {2, 0}, {2, 2}},
      {{0, 3}, {3, 0}, {3, 3}},
      {{1, 2}, {2, 3}, {3, 1}},
      {{1, 3}, {2, 1}, {3, 2}},
  };
}

std::vector<Basis> pauli_partition_dim4() {
  std::vector<Basis> bases;
  for (const auto& triple : pauli_partition_triples()) {
    std::vector<Mat> family;
    for (const auto& [i, j] : triple) family.push_back(pauli2(i, j));
    bases.push_back(joint_eigenbasis(family, 4));
  }
  return bases;
}

}  // namespace qoa
