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

#include "qoa/block_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "qoa/cartan.hpp"
#include "qoa/weyl.hpp"

namespace qoa {

namespace {

Vec vec_trace(const Mat& m) {
  // Plain column-major vectorization; dot products match Tr(A* B).
  return Eigen::Map<const Vec>(m.data(), m.size());
}

}  // namespace

BlockUnitary split_blocks(const Mat& w, int n, int m, double eps) {
  if (w.rows() != static_cast<Eigen::Index>(n) * m || w.rows() != w.cols()) {
    throw std::invalid_argument("split_blocks: dimension mismatch");
  }
  if (!is_unitary(w, eps)) {
    throw std::invalid_argument("split_blocks: matrix is not unitary");
  }
  BlockUnitary bu;
  bu.n = n;
  bu.m = m;
  bu.w = w;
  bu.blocks.assign(n, std::vector<Mat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bu.blocks[i][j] = w.block(i * m, j * m, m, m);
    }
  }
  return bu;
}

double usefulness_defect(const BlockUnitary& bu) {
  const int m2 = bu.m * bu.m;
  Mat frame = Mat::Zero(m2, m2);
  for (int i = 0; i < bu.n; ++i) {
    for (int j = 0; j < bu.n; ++j) {
      Vec v = vec_trace(bu.blocks[i][j]);
      frame += v * v.adjoint();
    }
  }
  frame *= static_cast<double>(bu.m) / bu.n;
  return (frame - Mat::Identity(m2, m2)).norm();
}

double usefulness_defect(const Mat& w, int n, int m) {
  return usefulness_defect(split_blocks(w, n, m));
}

OperatorAlgebra conjugated_algebra(const Mat& w, int n, int m, double eps) {
  if (!is_unitary(w, eps)) {
    throw std::invalid_argument("conjugated_algebra: matrix is not unitary");
  }
  std::vector<Mat> span;
  const Mat in = Mat::Identity(n, n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      Mat e = Mat::Zero(m, m);
      e(a, b) = 1.0;
      span.push_back(w * tensor(in, e) * w.adjoint());
    }
  }
  OperatorAlgebra alg = algebra_from_span(n * m, span, StructureTag::kFactor);
  alg.conjugator = w;
  alg.factor_inner_dim = m;
  return alg;
}

BlockUnitary weyl_block_unitary(int n, const Mat& c) {
  if (c.rows() != n || c.cols() != n || !is_unitary(c, 1e-9)) {
    throw std::invalid_argument("weyl_block_unitary: c must be an n x n unitary");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(n * std::norm(c(i, j)) - 1.0) > 1e-9) {
        throw std::invalid_argument(
            "weyl_block_unitary: entries must have modulus 1/sqrt(n)");
      }
    }
  }
  WeylSystem sys = weyl_system(n);
  // Precompute powers; exponents are 1-based so that n = 2 with constant
  // coefficients lands on the {-i s2, s1; s3, I}/sqrt(2) block pattern.
  std::vector<Mat> xp(n + 1), zp(n + 1);
  xp[0] = zp[0] = Mat::Identity(n, n);
  for (int t = 1; t <= n; ++t) {
    xp[t] = sys.x * xp[t - 1];
    zp[t] = sys.z * zp[t - 1];
  }
  Mat w(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w.block(i * n, j * n, n, n) = c(i, j) * xp[(i + 1) % n] * zp[(j + 1) % n];
    }
  }
  return split_blocks(w, n, n);
}

bool adjoint_closure_check(const Mat& w, int n, int m, double eps) {
  const bool fwd = usefulness_defect(w, n, m) <= eps;
  const bool bwd = usefulness_defect(Mat(w.adjoint()), n, m) <= eps;
  return fwd == bwd;
}

Mat pauli_triplet_unitary(const Mat& a1, const Mat& a3) {
  if ((a1 * a3 + a3 * a1).norm() > 1e-9) {
    throw std::invalid_argument("pauli_triplet_unitary: arguments must anticommute");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(a3);
  // Eigenvalues ascend, so columns 2,3 span the +1 eigenspace.
  Vec f1 = es.eigenvectors().col(2);
  Vec f2 = es.eigenvectors().col(3);
  Mat u(4, 4);
  u.col(0) = f1;
  u.col(1) = a1 * f1;
  u.col(2) = f2;
  u.col(3) = a1 * f2;
  return u;
}

FamilyStrategy family_strategy_from_string(const std::string& s) {
  if (s == "pauli-triplet") return FamilyStrategy::kPauliTriplet;
  if (s == "cartan-random") return FamilyStrategy::kCartanRandom;
  throw std::invalid_argument("unknown family strategy: " + s);
}

namespace {

// Compatibility of a candidate with every current member: the relative
// unitaries members[j]^* cand must all be useful, which is equivalent to
// pairwise quasi-orthogonality of the conjugated algebras.
bool compatible(const std::vector<Mat>& members, const Mat& cand, int n,
                double eps, std::int64_t& trials, std::int64_t budget) {
  for (const Mat& m : members) {
    if (trials >= budget) return false;
    ++trials;
    if (usefulness_defect(Mat(m.adjoint() * cand), n, n) > eps) return false;
  }
  return true;
}

struct TripletCandidate {
  std::array<std::pair<int, int>, 3> words;
  Mat member;
};

int word_mul_index(int a, int b) {
  // Index of the Pauli word (up to phase) in sigma_a sigma_b.
  if (a == b) return 0;
  if (a == 0) return b;
  if (b == 0) return a;
  return 6 - a - b;  // {1,2,3} \ {a,b}
}

bool words_anticommute(std::pair<int, int> u, std::pair<int, int> v) {
  auto anti = [](int a, int b) { return a != 0 && b != 0 && a != b; };
  return anti(u.first, v.first) != anti(u.second, v.second);
}

std::vector<TripletCandidate> enumerate_triplet_candidates() {
  std::vector<TripletCandidate> out;
  std::set<std::array<int, 3>> seen;
  for (int u = 1; u < 16; ++u) {
    for (int v = u + 1; v < 16; ++v) {
      std::pair<int, int> wu{u / 4, u % 4};
      std::pair<int, int> wv{v / 4, v % 4};
      if (!words_anticommute(wu, wv)) continue;
      int t = 4 * word_mul_index(wu.first, wv.first) +
              word_mul_index(wu.second, wv.second);
      std::array<int, 3> key{u, v, t};
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      TripletCandidate c;
      c.words = {std::pair{key[0] / 4, key[0] % 4},
                 std::pair{key[1] / 4, key[1] % 4},
                 std::pair{key[2] / 4, key[2] % 4}};
      Mat a1 = pauli2(c.words[0].first, c.words[0].second);
      Mat a3 = pauli2(c.words[2].first, c.words[2].second);
      c.member = pauli_triplet_unitary(a1, a3);
      out.push_back(std::move(c));
    }
  }
  return out;
}

FamilySearchResult search_pauli_triplet(int k, std::uint64_t seed,
                                        std::int64_t budget, double eps) {
  auto candidates = enumerate_triplet_candidates();
  FamilySearchResult result;
  std::vector<Mat> best{Mat::Identity(4, 4)};
  std::mt19937_64 rng(derive_seed(seed, "pauli-triplet"));
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  while (result.trials < budget) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Mat> members{Mat::Identity(4, 4)};
    for (std::size_t idx : order) {
      if (static_cast<int>(members.size()) >= k) break;
      const Mat& cand = candidates[idx].member;
      if (compatible(members, cand, 2, eps, result.trials, budget)) {
        members.push_back(cand);
      }
    }
    if (members.size() > best.size()) best = members;
    if (static_cast<int>(best.size()) >= k) break;
  }
  result.success = static_cast<int>(best.size()) >= k;
  result.family.members = best;
  return result;
}

Mat random_cartan_member(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> cls(1, 3);
  std::uniform_int_distribution<int> kk(0, 3);
  const double quarter = std::numbers::pi / 4.0;
  const double free = angle(rng);
  const double v1 = quarter + kk(rng) * std::numbers::pi / 2.0;
  const double v2 = quarter + kk(rng) * std::numbers::pi / 2.0;
  CartanParams p{};
  switch (cls(rng)) {
    case 1: p = {free, v1, v2}; break;
    case 2: p = {v1, free, v2}; break;
    default: p = {v1, v2, free}; break;
  }
  Mat l1 = haar_unitary(2, rng());
  Mat l2 = haar_unitary(2, rng());
  return tensor(l1, l2) * cartan_n(p);
}

Mat random_weyl_probe(int n, std::mt19937_64& rng) {
  // c = D1 * Fourier * D2 is unitary with all |c_ij| = 1/sqrt(n).
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / n);
  Mat f(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) f(i, j) = std::pow(q, i * j) / std::sqrt(double(n));
  }
  Mat c = f;
  for (int i = 0; i < n; ++i) c.row(i) *= std::polar(1.0, angle(rng));
  for (int j = 0; j < n; ++j) c.col(j) *= std::polar(1.0, angle(rng));
  return weyl_block_unitary(n, c).w;
}

FamilySearchResult search_sampling(int n, int k, FamilyStrategy strategy,
                                   std::uint64_t seed, std::int64_t budget,
                                   double eps) {
  FamilySearchResult result;
  const int dim = n * n;
  std::vector<Mat> members{Mat::Identity(dim, dim)};
  std::vector<Mat> best = members;
  std::mt19937_64 rng(derive_seed(seed, "family-sampling"));
  while (result.trials < budget && static_cast<int>(members.size()) < k) {
    Mat cand = (n == 2 && strategy == FamilyStrategy::kCartanRandom)
                   ? random_cartan_member(rng)
                   : random_weyl_probe(n, rng);
    if (compatible(members, cand, n, eps, result.trials, budget)) {
      members.push_back(cand);
    }
    if (members.size() > best.size()) best = members;
  }
  result.success = static_cast<int>(best.size()) >= k;
  result.family.members = best;
  return result;
}

}  // namespace

FamilySearchResult family_search(int n, int k, FamilyStrategy strategy,
                                 std::uint64_t seed, std::int64_t budget,
                                 double eps) {
  if (n < 2 || k < 2) {
    throw std::invalid_argument("family_search: require n >= 2 and k >= 2");
  }
  FamilySearchResult result =
      (n == 2 && strategy == FamilyStrategy::kPauliTriplet)
          ? search_pauli_triplet(k, seed, budget, eps)
          : search_sampling(n, k, strategy, seed, budget, eps);
  double max_defect = 0.0;
  for (std::size_t i = 0; i < result.family.members.size(); ++i) {
    result.family.algebras.push_back(
        conjugated_algebra(result.family.members[i], n, n));
    for (std::size_t j = 0; j < i; ++j) {
      max_defect = std::max(
          max_defect,
          usefulness_defect(Mat(result.family.members[j].adjoint() *
                                result.family.members[i]),
                            n, n));
    }
  }
  result.family.max_pair_defect = max_defect;
  return result;
}

}  // namespace qoa
