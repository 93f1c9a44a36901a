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

#include <cstdint>
#include <span>
#include <vector>

#include "mgsim/circuit.hpp"

namespace mgsim {

struct BenchPoint {
  int n = 0;
  int gates = 0;
  double seconds = 0.0;
  double gates_per_sec = 0.0;
};

struct BenchReport {
  Engine engine = Engine::quadratic;
  std::vector<BenchPoint> points;
  /// Least-squares slope of log(seconds) against log(n).
  double exponent = 0.0;
};

/// Least-squares slope of log(seconds) against log(n); needs two distinct n.
double fit_exponent(std::span<const BenchPoint> points);

/// Times compile + simulate of one random unitary circuit per n.
BenchReport run_bench(std::span<const int> ns, int gates, std::uint64_t seed,
                      Engine engine = Engine::quadratic);

}  // namespace mgsim
