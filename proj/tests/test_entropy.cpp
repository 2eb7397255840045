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

#include <doctest.h>

#include <cmath>

#include "qoa/entropy.hpp"

using namespace qoa;

namespace {

ObservableSpec standard_observable(int dim) {
  return observable_from_basis({dim, Mat::Identity(dim, dim)});
}

}  // namespace

TEST_CASE("state constructors validate") {
  State s = pure_state(haar_vector(3, 1));
  validate_state(s);
  CHECK(std::abs(s.rho.trace() - Complex(1.0)) < 1e-12);
  State m = random_mixed_state(4, 2);
  validate_state(m);
  CHECK((m.rho - random_mixed_state(4, 2).rho).norm() == 0.0);
}

TEST_CASE("observable entropy closed forms") {
  ObservableSpec a = standard_observable(2);
  // basis state: zero entropy
  Vec e0 = Vec::Zero(2);
  e0(0) = 1;
  CHECK(observable_entropy(a, pure_state(e0)) == doctest::Approx(0.0));
  // balanced superposition: log 2
  Vec plus = Vec::Constant(2, 1.0 / std::sqrt(2.0));
  CHECK(observable_entropy(a, pure_state(plus)) ==
        doctest::Approx(std::log(2.0)));
  // maximally mixed in dim 3: log 3
  State mixed{Mat::Identity(3, 3) / 3.0};
  CHECK(observable_entropy(standard_observable(3), mixed) ==
        doctest::Approx(std::log(3.0)));
}

TEST_CASE("mu constant for unbiased and identical pairs") {
  for (int p : {2, 3, 5}) {
    std::vector<Basis> bases = mub_prime(p);
    ObservableSpec a = observable_from_basis(bases[0]);
    ObservableSpec b = observable_from_basis(bases[1]);
    CHECK(mu_constant(a, b) == doctest::Approx(1.0 / std::sqrt(double(p))));
    CHECK(mu_constant(a, a) == doctest::Approx(1.0));
  }
}

TEST_CASE("mu slack nonnegative and tight at basis states") {
  std::vector<Basis> bases = mub_prime(3);
  ObservableSpec a = observable_from_basis(bases[0]);
  ObservableSpec b = observable_from_basis(bases[1]);
  for (int t = 0; t < 50; ++t) {
    State pure = pure_state(haar_vector(3, derive_seed(3, "mu-pure", t)));
    State mixed = random_mixed_state(3, derive_seed(3, "mu-mixed", t));
    CHECK(mu_slack(a, b, pure) >= -1e-9);
    CHECK(mu_slack(a, b, mixed) >= -1e-9);
  }
  State attained = pure_state(bases[0].vector(1));
  // oracle: H(A) = 0 and H(B) = log 3 = -2 log c, so the slack is 0
  CHECK(std::abs(mu_slack(a, b, attained)) < 1e-9);
}

TEST_CASE("povm slack reduces to the projective bound on sharp povms") {
  std::vector<Basis> bases = mub_prime(2);
  Povm e{observable_from_basis(bases[0]).projections};
  Povm f{observable_from_basis(bases[1]).projections};
  for (int t = 0; t < 20; ++t) {
    Vec phi = haar_vector(2, derive_seed(5, "povm", t));
    PovmSlackResult r = povm_slack(e, f, phi);
    if (!r.degenerate) CHECK(r.slack >= -1e-9);
  }
}

TEST_CASE("povm slack flags vanishing denominators") {
  std::vector<Basis> bases = mub_prime(2);
  Povm e{observable_from_basis(bases[0]).projections};
  // phi is an eigenvector of the first observable: one outcome
  // probability vanishes exactly
  Vec phi = bases[0].vector(0);
  PovmSlackResult r = povm_slack(e, e, phi);
  CHECK(r.degenerate);
  CHECK(r.skipped_terms > 0);
}

TEST_CASE("sanchez slack and its dim-2 closed form") {
  for (int dim : {2, 3}) {
    std::vector<ObservableSpec> family;
    for (const Basis& b : mub_prime(dim)) {
      family.push_back(observable_from_basis(b));
    }
    for (int t = 0; t < 30; ++t) {
      State s = random_mixed_state(dim, derive_seed(7, "sanchez", t));
      CHECK(sanchez_slack(family, s) >= -1e-9);
    }
    State basis_state = pure_state(family[0].projections[0].col(0).normalized().eval());
    if (dim == 2) {
      // oracle: H = 0 for the measured basis, log 2 for the other two;
      // bound is 3 log(3/2)
      const double expect = 2.0 * std::log(2.0) - 3.0 * std::log(1.5);
      CHECK(sanchez_slack(family, basis_state) == doctest::Approx(expect));
    }
  }
}

TEST_CASE("sanchez rejects biased families") {
  std::vector<ObservableSpec> family{standard_observable(2),
                                     standard_observable(2),
                                     standard_observable(2)};
  State s{Mat::Identity(2, 2) / 2.0};
  CHECK_THROWS(sanchez_slack(family, s));
}
