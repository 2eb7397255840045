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

#include "qoa/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qoa {

using nlohmann::json;

json mat_to_json(const Mat& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rrow = json::array();
    json irow = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Mat mat_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != dim || static_cast<int>(im.size()) != dim) {
    throw std::invalid_argument("matrix json: row count does not match dim");
  }
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(re[i].size()) != dim ||
        static_cast<int>(im[i].size()) != dim) {
      throw std::invalid_argument("matrix json: column count does not match dim");
    }
    for (int jj = 0; jj < dim; ++jj) {
      m(i, jj) = Complex(re[i][jj].get<double>(), im[i][jj].get<double>());
    }
  }
  return m;
}

json basis_to_json(const Basis& b) {
  return json{{"dim", b.n}, {"vectors", mat_to_json(b.vectors)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

OperatorAlgebra algebra_from_json_file(const std::string& path) {
  json j = load_json_file(path);
  StructureTag tag = StructureTag::kGeneral;
  const json* gens = &j;
  if (j.is_object()) {
    gens = &j.at("generators");
    if (j.contains("tag")) {
      const std::string t = j["tag"].get<std::string>();
      if (t == "commutative") {
        tag = StructureTag::kCommutative;
      } else if (t == "factor") {
        tag = StructureTag::kFactor;
      } else if (t != "general") {
        throw std::invalid_argument("algebra json: unknown tag " + t);
      }
    }
  }
  std::vector<Mat> generators;
  for (const auto& g : *gens) generators.push_back(mat_from_json(g));
  return algebra_close(generators, tag);
}

}  // namespace qoa
