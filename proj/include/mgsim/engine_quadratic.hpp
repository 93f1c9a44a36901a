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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mgsim/exponents.hpp"
#include "mgsim/jw.hpp"
#include "mgsim/pauli.hpp"
#include "mgsim/sim.hpp"

namespace mgsim {

/// Action of one gate on the d-operators: exp(A) d_sigma exp(-A) =
/// sum_nu K_{sigma nu} d_nu with K = exp(-4 a~). K is complex orthogonal and
/// equals the identity outside `support`, so only that block is stored.
struct TransferMatrix {
  int dim = 1;                // 2n + 1
  std::vector<int> support;   // indices in 0..2n
  Eigen::MatrixXcd block;     // K restricted to support x support
  cplx det_factor = 1.0;      // exp(s)

  Eigen::MatrixXcd dense() const;
};

TransferMatrix gate_transfer(const GateExponent& g);

/// Antisymmetric coefficient matrix B (indices 0..2n) with
/// O = sum_{mu,nu} B_{mu nu} d_mu d_nu.
Eigen::MatrixXcd observable_coefficients(const Observable& obs, int n);

/// Coefficient matrix of C^{-1} O C for the circuit C = G_m ... G_1
/// (gates listed in application order).
Eigen::MatrixXcd heisenberg_coefficients(std::span<const GateExponent> gates,
                                         const Observable& obs, int n);

/// Expands a coefficient matrix into Pauli strings over the family's d's.
PauliSum coefficients_to_pauli(const Eigen::MatrixXcd& b, const JwFamily& family);

/// C^{-1} O C as a Pauli sum (family.width() lines).
PauliSum heisenberg_observable(std::span<const GateExponent> gates, const Observable& obs,
                               const JwFamily& family);

/// <psi| C^{-1} O C |psi> via Heisenberg propagation of the quadratic form.
SimResult simulate_quadratic(std::span<const GateExponent> gates, const ProductState& state,
                             const Observable& obs, const SimOptions& options = {});

}  // namespace mgsim
