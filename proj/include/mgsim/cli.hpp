// Copyright 2026 The mgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "mgsim/pauli.hpp"
#include "mgsim/sim.hpp"

namespace mgsim {

/// Complex numbers travel as "re,im" strings with 17 significant digits.
nlohmann::json complex_to_json(cplx z);
/// Accepts "re,im", [re, im], a bare number or a complex literal string.
cplx complex_from_json(const nlohmann::json& j);

/// Row-major array of rows; also accepts {"matrix": rows}.
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);

nlohmann::json result_to_json(const SimResult& r);

/// Command-line entry point. Exit codes: 0 success, 1 domain error, 2 usage
/// error. Results go to `out` as JSON, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgsim
