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

// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "qoa/suite.hpp"
#include "qoa/weyl.hpp"

namespace {

int failures = 0;

void line(int idx, const std::string& what, bool pass, double measured) {
  std::printf("criterion %2d [%s] %s (measured %.3e)\n", idx,
              pass ? "pass" : "FAIL", what.c_str(), measured);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

const qoa::SuiteCheck& find(const qoa::SuiteReport& rep, const std::string& name) {
  for (const qoa::SuiteCheck& c : rep.checks) {
    if (c.name == name) return c;
  }
  std::fprintf(stderr, "missing suite check %s\n", name.c_str());
  std::exit(3);
}

}  // namespace

int main() {
  const auto wall0 = std::chrono::steady_clock::now();
  qoa::RunConfig cfg;

  // Construction timing for the first criterion, measured separately so
  // the per-dimension budget is explicit.
  double worst_mub_seconds = 0.0;
  for (int p : {2, 3, 5, 7}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto bases = qoa::mub_prime(p);
    worst_mub_seconds = std::max(worst_mub_seconds, seconds_since(t0));
    if (static_cast<int>(bases.size()) != p + 1) {
      std::fprintf(stderr, "mub count wrong for p=%d\n", p);
      return 3;
    }
  }

  const auto family_t0 = std::chrono::steady_clock::now();
  qoa::SuiteReport rep = qoa::run_suite(cfg);
  const double suite_seconds = seconds_since(family_t0);

  const auto& mub = find(rep, "mub-prime");
  line(1, "p+1 unbiased bases in prime dims, constructed in under 1 s each",
       mub.pass && worst_mub_seconds < 1.0, mub.measured);

  const auto& dim4 = find(rep, "mub-dim4-pauli");
  line(2, "five unbiased bases from the dimension-4 construction", dim4.pass,
       dim4.measured);

  const auto& equiv = find(rep, "condition-equivalence");
  line(3, "four complementarity conditions agree on 200+ pairs", equiv.pass,
       equiv.measured);

  const auto& named = find(rep, "useful-named");
  const auto& haar = find(rep, "useful-haar-defect");
  line(4, "named block unitaries useful, Haar-random ones never",
       named.pass && haar.pass, haar.measured);

  const auto& cartan = find(rep, "cartan-agreement");
  line(5, "class/coefficient/defect three-way agreement plus fixed point",
       cartan.pass, cartan.measured);

  const auto& inter = find(rep, "intersection-theorem");
  const auto& fam = find(rep, "family-four-not-five");
  line(6, "intersections nontrivial; family size 4 attainable, 5 not",
       inter.pass && fam.pass && suite_seconds < 60.0, fam.measured);

  const auto& mu = find(rep, "mu-slack");
  const auto& san = find(rep, "sanchez-slack");
  line(7, "entropic bounds nonnegative with tight closed-form points",
       mu.pass && san.pass, std::max(mu.measured, san.measured));

  const auto& car = find(rep, "car-partitions");
  line(8, "fermionic mode partitions complementary, swap blocks a basis",
       car.pass, car.measured);

  const auto& bell = find(rep, "bell-complementarity");
  line(9, "Bell-diagonal conjugates stay complementary", bell.pass,
       bell.measured);

  const auto& span = find(rep, "spanning-decomposition");
  line(10, "five-algebra spanning decomposition reconstructs M_4", span.pass,
       span.measured);

  qoa::SuiteReport rep2 = qoa::run_suite(cfg);
  const bool deterministic = rep.to_json().dump() == rep2.to_json().dump();
  const double total_seconds = seconds_since(wall0);
  line(11, "suite deterministic per seed and under the time budget",
       deterministic && total_seconds < 300.0, total_seconds);

  return failures == 0 ? 0 : 1;
}
