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
#include "mgsim/pauli.hpp"
#include "mgsim/sim.hpp"

namespace mgsim::oracle {

/// Dense simulation refuses registers larger than this.
inline constexpr int kMaxLines = 12;

/// Operator on an ordered list of lines. The first listed line is the most
/// significant bit of the local index.
struct LocalGate {
  Eigen::MatrixXcd matrix;
  std::vector<int> lines;
};

/// State vector over n lines, line 1 the most significant bit.
class DenseState {
 public:
  explicit DenseState(int n);
  static DenseState from_product(const ProductState& state);

  int n() const { return n_; }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Eigen::VectorXcd& amplitudes() { return amp_; }

  void apply(const Eigen::MatrixXcd& m, std::span<const int> lines);
  void apply(const LocalGate& g) { apply(g.matrix, g.lines); }

 private:
  int n_;
  Eigen::VectorXcd amp_;
};

Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Full 2^n x 2^n matrix of a Pauli string or Pauli sum.
Eigen::MatrixXcd dense_matrix(const PauliString& p);
Eigen::MatrixXcd dense_matrix(const PauliSum& s);

/// Embeds an operator on `lines` into the full register.
Eigen::MatrixXcd embed_matrix(const Eigen::MatrixXcd& m, std::span<const int> lines, int n);

/// exp(A) restricted to the gate's line support, computed directly from
/// the Jordan-Wigner strings with a Schur-Pade exponential.
LocalGate exp_gate(const GateExponent& g);

/// How the conjugated observable is formed.
enum class HeisenbergMode {
  inverse,  // <psi| C^{-1} O C |psi>
  adjoint   // <psi| C^dagger O C |psi>
};

/// Expectation of the observable after the gates (application order).
cplx expectation(std::span<const LocalGate> gates, const ProductState& state,
                 const Observable& obs, HeisenbergMode mode = HeisenbergMode::inverse);

/// Full matrix of C^{-1} O C.
Eigen::MatrixXcd heisenberg_matrix(std::span<const LocalGate> gates, const Observable& obs,
                                   int n);

/// Pauli coordinates tr(P M) / 2^n of a full matrix.
PauliSum pauli_expand(const Eigen::MatrixXcd& m, int n);

SimResult simulate(std::span<const LocalGate> gates, const ProductState& state,
                   const Observable& obs, HeisenbergMode mode, const SimOptions& options = {});

}  // namespace mgsim::oracle
