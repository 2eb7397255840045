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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qoa/matrix_core.hpp"

namespace qoa {

struct RunConfig {
  double eps = kDefaultEps;
  std::uint64_t seed = 1;
  int samples = 16;
};

struct SuiteCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;  // worst defect / slack observed
  double threshold = 0.0;
  std::string claim;      // the verified statement, for traceability
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Runs the full bundled verification; deterministic for a fixed seed.
SuiteReport run_suite(const RunConfig& cfg);

}  // namespace qoa
