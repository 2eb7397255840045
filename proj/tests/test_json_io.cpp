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

#include <cstdio>
#include <fstream>

#include "qoa/json_io.hpp"

using namespace qoa;

TEST_CASE("matrix json round trip") {
  Mat m = haar_unitary(3, 61);
  Mat back = mat_from_json(mat_to_json(m));
  CHECK((m - back).norm() < 1e-15);
}

TEST_CASE("matrix json validation") {
  nlohmann::json bad{{"dim", 2}, {"re", {{1.0}}}, {"im", {{0.0}}}};
  CHECK_THROWS(mat_from_json(bad));
}

TEST_CASE("algebra file round trip") {
  const std::string path = "qoa_test_alg.json";
  {
    nlohmann::json j;
    j["tag"] = "factor";
    j["generators"] = nlohmann::json::array();
    j["generators"].push_back(mat_to_json(tensor(Mat::Identity(2, 2), pauli(1))));
    j["generators"].push_back(mat_to_json(tensor(Mat::Identity(2, 2), pauli(3))));
    std::ofstream f(path);
    f << j.dump();
  }
  OperatorAlgebra alg = algebra_from_json_file(path);
  std::remove(path.c_str());
  CHECK(alg.tag == StructureTag::kFactor);
  CHECK(alg.ambient_dim == 4);
  CHECK(alg.dimension() == 4);
}

TEST_CASE("missing file raises") {
  CHECK_THROWS(algebra_from_json_file("does_not_exist.json"));
}

TEST_CASE("basis json carries the column matrix") {
  Basis b{2, haar_unitary(2, 71)};
  nlohmann::json j = basis_to_json(b);
  CHECK(j["dim"] == 2);
  Mat back = mat_from_json(j["vectors"]);
  CHECK((back - b.vectors).norm() < 1e-15);
}
