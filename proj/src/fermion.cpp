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

#include "qoa/fermion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qoa {

FermionSystem jordan_wigner(int n) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("jordan_wigner: n must be in 1..6");
  }
  Mat lower = Mat::Zero(2, 2);
  lower(0, 1) = 1.0;  // annihilator on one mode
  FermionSystem sys;
  sys.n_modes = n;
  for (int i = 1; i <= n; ++i) {
    Mat op = Mat::Identity(1, 1);
    for (int s = 1; s < i; ++s) op = tensor(op, pauli(3));
    op = tensor(op, lower);
    for (int s = i + 1; s <= n; ++s) op = tensor(op, Mat::Identity(2, 2));
    sys.ops.push_back(op);
  }
  return sys;
}

double car_residual(const FermionSystem& sys) {
  const Eigen::Index d = sys.ops.front().rows();
  const Mat id = Mat::Identity(d, d);
  double worst = 0.0;
  for (std::size_t i = 0; i < sys.ops.size(); ++i) {
    for (std::size_t j = 0; j < sys.ops.size(); ++j) {
      const Mat& a = sys.ops[i];
      const Mat& b = sys.ops[j];
      worst = std::max(worst, (a * b + b * a).norm());
      Mat mixed = a * b.adjoint() + b.adjoint() * a;
      if (i == j) mixed -= id;
      worst = std::max(worst, mixed.norm());
    }
  }
  return worst;
}

OperatorAlgebra mode_subalgebra(const FermionSystem& sys,
                                const std::vector<int>& modes) {
  std::vector<Mat> gens;
  for (int m : modes) {
    if (m < 1 || m > sys.n_modes) {
      throw std::invalid_argument("mode_subalgebra: mode index out of range");
    }
    gens.push_back(sys.ops[static_cast<std::size_t>(m) - 1]);
  }
  return algebra_close(gens);
}

double car_partition_check(const FermionSystem& sys, const std::vector<int>& j1,
                           const std::vector<int>& j2) {
  if (j1.empty() || j2.empty()) {
    throw std::invalid_argument("car_partition_check: empty partition part");
  }
  std::set<int> all(j1.begin(), j1.end());
  for (int m : j2) {
    if (!all.insert(m).second) {
      throw std::invalid_argument("car_partition_check: overlapping partition");
    }
  }
  if (static_cast<int>(all.size()) != sys.n_modes || *all.begin() < 1 ||
      *all.rbegin() > sys.n_modes) {
    throw std::invalid_argument("car_partition_check: partition must cover all modes");
  }
  return quasi_orthogonality_defect(mode_subalgebra(sys, j1),
                                    mode_subalgebra(sys, j2));
}

Mat car_swap_unitary() {
  Mat v = Mat::Zero(4, 4);
  v(0, 0) = 1.0;
  v(1, 2) = 1.0;
  v(2, 1) = -1.0;
  v(3, 3) = 1.0;
  return v;
}

}  // namespace qoa
