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
#include <random>
#include <string>
#include <vector>

#include "mgsim/circuit.hpp"

namespace mgsim {

struct RandomCircuitOptions {
  int n = 4;
  int depth = 20;
  /// Classes drawn uniformly from this list; mg12 and gvw are skipped on a
  /// single line.
  std::vector<std::string> classes{"gvw", "diag", "mg12", "u1", "exp"};
  /// Size of the non-anti-Hermitian part mixed into every generator; 0
  /// gives a unitary circuit.
  double nonunitary = 0.0;
  /// Raw exponents act on at most this many consecutive lines.
  int exp_window = 3;
  /// Draw a random product input state instead of |0...0>.
  bool random_state = true;
};

/// Random invertible 2x2 matrix exp(i H + eps G) with H Hermitian.
Mat2 random_gate2(std::mt19937_64& rng, double nonunitary);

GateRecord random_gate(const std::string& cls, int n, std::mt19937_64& rng,
                       const RandomCircuitOptions& options);

Circuit random_circuit(const RandomCircuitOptions& options, std::mt19937_64& rng);

}  // namespace mgsim
