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

#include "qoa/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qoa {

namespace {

constexpr double kEigCluster = 1e-8;

void check_same_ambient(const OperatorAlgebra& a1, const OperatorAlgebra& a2) {
  if (a1.ambient_dim != a2.ambient_dim) {
    throw std::invalid_argument("ambient dimension mismatch");
  }
}

double tau(const Mat& m) {
  return m.trace().real() / static_cast<double>(m.rows());
}

}  // namespace

Vec vectorize(const Mat& m) {
  Vec v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
  }
  return v / std::sqrt(static_cast<double>(m.rows()));
}

void extend_orthonormal(std::vector<Mat>& basis,
                        const std::vector<Mat>& candidates, double rank_tol) {
  for (const Mat& c : candidates) {
    const double orig = hs_norm(c);
    Mat r = c;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Mat& b : basis) r -= hs_inner(b, r) * b;
    }
    const double res = hs_norm(r);
    if (res > rank_tol * std::max(1.0, orig)) {
      basis.push_back(r / res);
    }
  }
}

OperatorAlgebra algebra_close(const std::vector<Mat>& generators,
                              StructureTag tag) {
  if (generators.empty()) {
    throw std::invalid_argument("algebra_close: no generators");
  }
  const Eigen::Index n = generators.front().rows();
  for (const Mat& g : generators) {
    if (g.rows() != n || g.cols() != n) {
      throw std::invalid_argument("algebra_close: generator dimension mismatch");
    }
  }
  OperatorAlgebra alg;
  alg.ambient_dim = static_cast<int>(n);
  alg.tag = tag;
  alg.basis.push_back(Mat::Identity(n, n));
  std::vector<Mat> seed;
  for (const Mat& g : generators) {
    seed.push_back(g);
    seed.push_back(g.adjoint());
  }
  extend_orthonormal(alg.basis, seed);
  // The span is adjoint-closed at every stage, so pairwise products keep
  // it adjoint-closed; iterate until the dimension stabilizes.
  for (;;) {
    const std::size_t before = alg.basis.size();
    std::vector<Mat> products;
    products.reserve(before * before);
    for (const Mat& a : alg.basis) {
      for (const Mat& b : alg.basis) products.push_back(a * b);
    }
    extend_orthonormal(alg.basis, products);
    if (alg.basis.size() == before) break;
  }
  return alg;
}

OperatorAlgebra algebra_from_span(int ambient_dim, const std::vector<Mat>& span,
                                  StructureTag tag) {
  OperatorAlgebra alg;
  alg.ambient_dim = ambient_dim;
  alg.tag = tag;
  alg.basis.push_back(Mat::Identity(ambient_dim, ambient_dim));
  extend_orthonormal(alg.basis, span);
  return alg;
}

OperatorAlgebra right_factor(int n, int m) {
  std::vector<Mat> span;
  const Mat in = Mat::Identity(n, n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      Mat e = Mat::Zero(m, m);
      e(a, b) = 1.0;
      span.push_back(tensor(in, e));
    }
  }
  OperatorAlgebra alg = algebra_from_span(n * m, span, StructureTag::kFactor);
  alg.conjugator = Mat::Identity(n * m, n * m);
  alg.factor_inner_dim = m;
  return alg;
}

OperatorAlgebra left_factor(int n, int m) {
  std::vector<Mat> span;
  const Mat im = Mat::Identity(m, m);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Mat e = Mat::Zero(n, n);
      e(a, b) = 1.0;
      span.push_back(tensor(e, im));
    }
  }
  OperatorAlgebra alg = algebra_from_span(n * m, span, StructureTag::kFactor);
  // M_n (x) C I = w (C I (x) M_n) w* for the slot-swap unitary w.
  Mat w = Mat::Zero(n * m, n * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) w(b * m + a, a * n + b) = 1.0;
  }
  alg.conjugator = w;
  alg.factor_inner_dim = n;
  return alg;
}

Mat conditional_expectation(const OperatorAlgebra& alg, const Mat& x) {
  if (x.rows() != alg.ambient_dim || x.cols() != alg.ambient_dim) {
    throw std::invalid_argument("conditional_expectation: dimension mismatch");
  }
  Mat e = Mat::Zero(alg.ambient_dim, alg.ambient_dim);
  for (const Mat& b : alg.basis) e += hs_inner(b, x) * b;
  return e;
}

double quasi_orthogonality_defect(const OperatorAlgebra& a1,
                                  const OperatorAlgebra& a2) {
  check_same_ambient(a1, a2);
  double defect = 0.0;
  for (std::size_t i = 1; i < a1.basis.size(); ++i) {
    for (std::size_t j = 1; j < a2.basis.size(); ++j) {
      defect = std::max(defect, std::abs(hs_inner(a1.basis[i], a2.basis[j])));
    }
  }
  return defect;
}

bool ComplementarityReport::all_agree() const {
  bool ref = cond_ii;
  if (cond_iii != ref || cond_iv != ref) return false;
  if (cond_i.has_value() && *cond_i != ref) return false;
  return true;
}

namespace {

// Common invariant subspaces of the commuting hermitian parts of the
// basis: exactly the ranges of the minimal projections of a commutative
// algebra.
std::vector<Mat> commutative_eigenspaces(const OperatorAlgebra& alg) {
  const int n = alg.ambient_dim;
  std::vector<Mat> hermitian_parts;
  const Complex im(0.0, 1.0);
  for (std::size_t i = 1; i < alg.basis.size(); ++i) {
    const Mat& b = alg.basis[i];
    hermitian_parts.push_back((b + b.adjoint()) / 2.0);
    hermitian_parts.push_back((b - b.adjoint()) / (2.0 * im));
  }
  std::vector<Mat> subspaces{Mat::Identity(n, n)};
  for (const Mat& h : hermitian_parts) {
    std::vector<Mat> refined;
    for (const Mat& v : subspaces) {
      if (v.cols() == 1) {
        refined.push_back(v);
        continue;
      }
      Mat restricted = v.adjoint() * h * v;
      Eigen::SelfAdjointEigenSolver<Mat> es(restricted);
      const auto& vals = es.eigenvalues();
      Eigen::Index start = 0;
      for (Eigen::Index i = 1; i <= vals.size(); ++i) {
        if (i == vals.size() || vals(i) - vals(start) > kEigCluster) {
          refined.push_back(v * es.eigenvectors().middleCols(start, i - start));
          start = i;
        }
      }
    }
    subspaces = std::move(refined);
  }
  return subspaces;
}

}  // namespace

std::vector<Mat> minimal_projections(const OperatorAlgebra& alg, int samples,
                                     std::uint64_t seed) {
  switch (alg.tag) {
    case StructureTag::kCommutative: {
      std::vector<Mat> projections;
      for (const Mat& v : commutative_eigenspaces(alg)) {
        projections.push_back(v * v.adjoint());
      }
      return projections;
    }
    case StructureTag::kFactor: {
      if (!alg.conjugator.has_value() || alg.factor_inner_dim == 0) {
        throw std::invalid_argument(
            "minimal_projections: factor algebra lacks a stored conjugator");
      }
      const Mat& w = *alg.conjugator;
      const int m = alg.factor_inner_dim;
      const int n = alg.ambient_dim / m;
      std::vector<Vec> grid;
      for (int i = 0; i < m; ++i) {
        Vec e = Vec::Zero(m);
        e(i) = 1.0;
        grid.push_back(e);
      }
      const Complex im(0.0, 1.0);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          for (Complex phase : {Complex(1, 0), Complex(-1, 0), im, -im}) {
            Vec v = Vec::Zero(m);
            v(i) = 1.0 / std::sqrt(2.0);
            v(j) = phase / std::sqrt(2.0);
            grid.push_back(v);
          }
        }
      }
      for (int t = 0; t < samples; ++t) {
        grid.push_back(haar_vector(m, derive_seed(seed, "minproj", t)));
      }
      std::vector<Mat> projections;
      const Mat in = Mat::Identity(n, n);
      for (const Vec& v : grid) {
        Mat p = v * v.adjoint();
        projections.push_back(w * tensor(in, p) * w.adjoint());
      }
      return projections;
    }
    case StructureTag::kGeneral:
      throw std::invalid_argument(
          "minimal_projections: unsupported for general structure tag");
  }
  throw std::logic_error("minimal_projections: unreachable");
}

bool is_homogeneous(const OperatorAlgebra& alg) {
  switch (alg.tag) {
    case StructureTag::kFactor:
      return true;
    case StructureTag::kCommutative: {
      auto projections = minimal_projections(alg);
      if (projections.empty()) return true;
      const double t0 = tau(projections.front());
      return std::all_of(projections.begin(), projections.end(),
                         [t0](const Mat& p) { return std::abs(tau(p) - t0) < 1e-9; });
    }
    case StructureTag::kGeneral:
      throw std::invalid_argument("is_homogeneous: unsupported structure tag");
  }
  throw std::logic_error("is_homogeneous: unreachable");
}

ComplementarityReport complementarity_report(const OperatorAlgebra& a1,
                                             const OperatorAlgebra& a2,
                                             int samples, std::uint64_t seed,
                                             double eps) {
  check_same_ambient(a1, a2);
  ComplementarityReport report;
  report.eps = eps;

  report.cond_ii_defect = quasi_orthogonality_defect(a1, a2);
  report.cond_ii = report.cond_ii_defect <= eps;

  double d3 = 0.0;
  for (const Mat& b1 : a1.basis) {
    for (const Mat& b2 : a2.basis) {
      d3 = std::max(d3, std::abs((b1 * b2).trace() /
                                     static_cast<double>(a1.ambient_dim) -
                                 b1.trace() * b2.trace() /
                                     std::pow(a1.ambient_dim, 2)));
    }
  }
  report.cond_iii_defect = d3;
  report.cond_iii = d3 <= eps;

  double d4 = 0.0;
  const Mat id = Mat::Identity(a1.ambient_dim, a1.ambient_dim);
  for (const Mat& b : a2.basis) {
    Mat e = conditional_expectation(a1, b);
    d4 = std::max(d4, hs_norm(e - (b.trace() / static_cast<double>(a1.ambient_dim)) * id));
  }
  report.cond_iv_defect = d4;
  report.cond_iv = d4 <= eps;

  auto can_sample = [](const OperatorAlgebra& a) {
    if (a.tag == StructureTag::kCommutative) return true;
    return a.tag == StructureTag::kFactor && a.conjugator.has_value() &&
           a.factor_inner_dim > 0;
  };
  if (can_sample(a1) && can_sample(a2)) {
    auto p1 = minimal_projections(a1, samples, derive_seed(seed, "cond_i", 1));
    auto p2 = minimal_projections(a2, samples, derive_seed(seed, "cond_i", 2));
    double d1 = 0.0;
    for (const Mat& p : p1) {
      for (const Mat& q : p2) {
        d1 = std::max(d1, std::abs(tau(p * q) - tau(p) * tau(q)));
      }
    }
    report.cond_i_defect = d1;
    report.cond_i = d1 <= eps;
  }
  return report;
}

SpanningDecomposition spanning_decomposition(
    const std::vector<OperatorAlgebra>& algebras, const Mat& x) {
  if (algebras.empty()) {
    throw std::invalid_argument("spanning_decomposition: empty family");
  }
  const int n = algebras.front().ambient_dim;
  if (x.rows() != n || x.cols() != n) {
    throw std::invalid_argument("spanning_decomposition: dimension mismatch");
  }
  SpanningDecomposition out;
  Mat joint(n * n, 0);
  {
    std::vector<Vec> cols;
    cols.push_back(vectorize(Mat::Identity(n, n)));
    for (const OperatorAlgebra& a : algebras) {
      for (std::size_t i = 1; i < a.basis.size(); ++i) {
        cols.push_back(vectorize(a.basis[i]));
      }
    }
    joint.resize(n * n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) {
      joint.col(static_cast<Eigen::Index>(i)) = cols[i];
    }
  }
  Eigen::JacobiSVD<Mat> svd(joint);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-8 * sv(0)) ++rank;
  }
  out.span_dim = rank;
  out.spanning = rank == n * n;

  const double r = static_cast<double>(algebras.size());
  out.reconstruction =
      -(x.trace() / static_cast<double>(n)) * (r - 1.0) * Mat::Identity(n, n);
  for (const OperatorAlgebra& a : algebras) {
    Mat e = conditional_expectation(a, x);
    out.components.push_back(e);
    out.reconstruction += e;
  }
  return out;
}

int intersection_dim(const OperatorAlgebra& a1, const OperatorAlgebra& a2) {
  check_same_ambient(a1, a2);
  const int n = a1.ambient_dim;
  const int d1 = a1.dimension();
  const int d2 = a2.dimension();
  Mat joint(n * n, d1 + d2);
  for (int i = 0; i < d1; ++i) joint.col(i) = vectorize(a1.basis[i]);
  for (int j = 0; j < d2; ++j) joint.col(d1 + j) = vectorize(a2.basis[j]);
  Eigen::JacobiSVD<Mat> svd(joint);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-8 * sv(0)) ++rank;
  }
  return d1 + d2 - rank;
}

}  // namespace qoa
