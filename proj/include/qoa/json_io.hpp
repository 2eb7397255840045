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

#include <string>

#include <json.hpp>

#include "qoa/subalgebra.hpp"
#include "qoa/weyl.hpp"

namespace qoa {

/// Matrix wire format: { "dim": n, "re": [[...]], "im": [[...]] }, row-major.
nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

nlohmann::json basis_to_json(const Basis& b);

/// Generator file: either a bare array of matrix objects or
/// { "generators": [...], "tag": "commutative" | "factor" | "general" }.
/// The generators are closed into an algebra.
OperatorAlgebra algebra_from_json_file(const std::string& path);

nlohmann::json load_json_file(const std::string& path);

}  // namespace qoa
