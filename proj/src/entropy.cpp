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

#include "qoa/entropy.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qoa {

namespace {

// eta(t) = -t log t, clamped at slightly negative floating-point
// probabilities.
double eta(double t) {
  if (t <= 0.0) return 0.0;
  return -t * std::log(t);
}

double prob(const Mat& effect, const Mat& rho) {
  return (effect * rho).trace().real();
}

}  // namespace

State pure_state(const Vec& phi) {
  Vec v = phi.normalized();
  return State{v * v.adjoint()};
}

State random_mixed_state(int dim, std::uint64_t seed) {
  // Normalized Wishart sample G G* / Tr(G G*).
  std::mt19937_64 rng(derive_seed(seed, "mixed"));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Mat rho = a * a.adjoint();
  rho /= rho.trace().real();
  return State{rho};
}

void validate_state(const State& s, double eps) {
  if (s.rho.rows() != s.rho.cols()) {
    throw std::invalid_argument("state: not square");
  }
  if (!is_hermitian(s.rho, eps)) {
    throw std::invalid_argument("state: not hermitian");
  }
  if (std::abs(s.rho.trace().real() - 1.0) > eps) {
    throw std::invalid_argument("state: trace not 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(s.rho);
  if (es.eigenvalues().minCoeff() < -eps) {
    throw std::invalid_argument("state: not positive semidefinite");
  }
}

ObservableSpec observable_from_basis(const Basis& b) {
  ObservableSpec a;
  for (int j = 0; j < b.n; ++j) {
    Vec v = b.vector(j);
    a.projections.push_back(v * v.adjoint());
  }
  return a;
}

void validate_observable(const ObservableSpec& a, double eps) {
  if (a.projections.empty()) {
    throw std::invalid_argument("observable: no projections");
  }
  const Eigen::Index n = a.projections.front().rows();
  Mat sum = Mat::Zero(n, n);
  for (const Mat& p : a.projections) {
    if (!is_projection(p, eps)) {
      throw std::invalid_argument("observable: element is not a projection");
    }
    sum += p;
  }
  if ((sum - Mat::Identity(n, n)).norm() > eps) {
    throw std::invalid_argument("observable: projections do not sum to I");
  }
}

void validate_povm(const Povm& e, double eps) {
  if (e.effects.empty()) throw std::invalid_argument("povm: no effects");
  const Eigen::Index n = e.effects.front().rows();
  Mat sum = Mat::Zero(n, n);
  for (const Mat& f : e.effects) {
    if (!is_hermitian(f, eps)) {
      throw std::invalid_argument("povm: effect not hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(f);
    if (es.eigenvalues().minCoeff() < -eps) {
      throw std::invalid_argument("povm: effect not positive");
    }
    sum += f;
  }
  if ((sum - Mat::Identity(n, n)).norm() > eps) {
    throw std::invalid_argument("povm: effects do not sum to I");
  }
}

double observable_entropy(const ObservableSpec& a, const State& s) {
  if (a.projections.front().rows() != s.rho.rows()) {
    throw std::invalid_argument("observable_entropy: dimension mismatch");
  }
  double h = 0.0;
  for (const Mat& p : a.projections) h += eta(prob(p, s.rho));
  return h;
}

double mu_constant(const ObservableSpec& a, const ObservableSpec& b) {
  const Eigen::Index n = a.projections.front().rows();
  for (const auto& list : {a.projections, b.projections}) {
    for (const Mat& p : list) {
      if (std::abs(p.trace().real() - 1.0) > 1e-8) {
        throw std::invalid_argument("mu_constant: projections must be rank 1");
      }
    }
  }
  if (a.projections.size() != static_cast<std::size_t>(n) ||
      b.projections.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("mu_constant: observables must be maximal Abelian");
  }
  double c2 = 0.0;
  for (const Mat& p : a.projections) {
    for (const Mat& q : b.projections) {
      c2 = std::max(c2, (p * q).trace().real());
    }
  }
  return std::sqrt(c2);
}

double mu_slack(const ObservableSpec& a, const ObservableSpec& b,
                const State& s) {
  const double c = mu_constant(a, b);
  return observable_entropy(a, s) + observable_entropy(b, s) + 2.0 * std::log(c);
}

PovmSlackResult povm_slack(const Povm& e, const Povm& f, const Vec& phi) {
  validate_povm(e);
  validate_povm(f);
  if (std::abs(phi.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("povm_slack: phi must be a unit vector");
  }
  constexpr double kDenomFloor = 1e-12;
  PovmSlackResult out;
  double he = 0.0, hf = 0.0;
  for (const Mat& ei : e.effects) he += eta((phi.adjoint() * ei * phi)(0).real());
  for (const Mat& fj : f.effects) hf += eta((phi.adjoint() * fj * phi)(0).real());
  double sup = 0.0;
  for (const Mat& ei : e.effects) {
    const double pe = (phi.adjoint() * ei * phi)(0).real();
    for (const Mat& fj : f.effects) {
      const double pf = (phi.adjoint() * fj * phi)(0).real();
      if (pe < kDenomFloor || pf < kDenomFloor) {
        ++out.skipped_terms;
        continue;
      }
      const double num = std::abs((phi.adjoint() * ei * fj * phi)(0));
      sup = std::max(sup, num / (pe * pf));
    }
  }
  out.degenerate = out.skipped_terms > 0;
  out.sup_ratio = sup;
  out.slack = he + hf + 2.0 * std::log(sup);
  return out;
}

double sanchez_slack(const std::vector<ObservableSpec>& observables,
                     const State& s) {
  if (observables.empty()) {
    throw std::invalid_argument("sanchez_slack: empty family");
  }
  const Eigen::Index n = observables.front().projections.front().rows();
  if (observables.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("sanchez_slack: need n+1 observables in dim n");
  }
  const double target = 1.0 / static_cast<double>(n);
  for (std::size_t a = 0; a < observables.size(); ++a) {
    for (std::size_t b = a + 1; b < observables.size(); ++b) {
      for (const Mat& p : observables[a].projections) {
        for (const Mat& q : observables[b].projections) {
          if (std::abs((p * q).trace().real() - target) > 1e-8) {
            throw std::invalid_argument(
                "sanchez_slack: observables are not pairwise unbiased");
          }
        }
      }
    }
  }
  double sum = 0.0;
  for (const ObservableSpec& a : observables) sum += observable_entropy(a, s);
  const double bound =
      (n + 1.0) * std::log((static_cast<double>(n) + 1.0) / 2.0);
  return sum - bound;
}

}  // namespace qoa
