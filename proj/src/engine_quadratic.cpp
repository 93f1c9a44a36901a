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

#include "mgsim/engine_quadratic.hpp"

#include <chrono>

#include "mgsim/error.hpp"
#include "mgsim/linalg.hpp"

namespace mgsim {

Eigen::MatrixXcd TransferMatrix::dense() const {
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Identity(dim, dim);
  const auto m = static_cast<Eigen::Index>(support.size());
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      k(support[r], support[c]) = block(r, c);
    }
  }
  return k;
}

TransferMatrix gate_transfer(const GateExponent& g) {
  const ExtendedQuadratic e = extend_quadratic(g);
  TransferMatrix t;
  t.dim = e.dim;
  t.support = e.support;
  t.block = linalg::expm(-4.0 * e.block);
  t.det_factor = std::exp(g.s());
  return t;
}

Eigen::MatrixXcd observable_coefficients(const Observable& obs, int n) {
  const int dim = 2 * n + 1;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
  const cplx h(0.0, 0.5);
  switch (obs.kind) {
    case Observable::Kind::z: {
      if (obs.line < 1 || obs.line > n) {
        throw PreconditionError("measured line " + std::to_string(obs.line) + " outside 1.." +
                                std::to_string(n));
      }
      // Z_k = -i c_{2k-1} c_{2k} = -i d_{2k-1} d_{2k}
      const int p = 2 * obs.line - 1;
      b(p, p + 1) = -h;
      b(p + 1, p) = h;
      break;
    }
    case Observable::Kind::x1:
      // c_1 = -i d_1 d_0
      b(1, 0) = -h;
      b(0, 1) = h;
      break;
    case Observable::Kind::y1:
      b(2, 0) = -h;
      b(0, 2) = h;
      break;
  }
  return b;
}

namespace {

// B <- K B K^T with K the identity outside the support.
void conjugate_in_place(Eigen::MatrixXcd& b, const TransferMatrix& t) {
  const auto m = static_cast<Eigen::Index>(t.support.size());
  if (m == 0) return;
  const Eigen::Index dim = b.rows();
  Eigen::MatrixXcd rows(m, dim);
  for (Eigen::Index r = 0; r < m; ++r) rows.row(r) = b.row(t.support[r]);
  rows = t.block * rows;
  for (Eigen::Index r = 0; r < m; ++r) b.row(t.support[r]) = rows.row(r);
  Eigen::MatrixXcd cols(dim, m);
  for (Eigen::Index c = 0; c < m; ++c) cols.col(c) = b.col(t.support[c]);
  cols = cols * t.block.transpose();
  for (Eigen::Index c = 0; c < m; ++c) b.col(t.support[c]) = cols.col(c);
}

void check_gates(std::span<const GateExponent> gates, int n) {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].n() != n) {
      throw DimensionError("gate " + std::to_string(i) + " is on " +
                           std::to_string(gates[i].n()) + " lines, circuit has " +
                           std::to_string(n));
    }
  }
}

}  // namespace

Eigen::MatrixXcd heisenberg_coefficients(std::span<const GateExponent> gates,
                                         const Observable& obs, int n) {
  check_gates(gates, n);
  Eigen::MatrixXcd b = observable_coefficients(obs, n);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    conjugate_in_place(b, gate_transfer(*it));
  }
  return b;
}

PauliSum coefficients_to_pauli(const Eigen::MatrixXcd& b, const JwFamily& family) {
  const int dim = 2 * family.n() + 1;
  if (b.rows() != dim || b.cols() != dim) {
    throw DimensionError("coefficient matrix does not match the operator family");
  }
  PauliSum out(family.width());
  cplx trace = 0.0;
  for (int mu = 0; mu < dim; ++mu) {
    trace += b(mu, mu);
    for (int nu = mu + 1; nu < dim; ++nu) {
      const cplx w = b(mu, nu) - b(nu, mu);
      if (w == 0.0) continue;
      out.add(pauli_mul(family.d(mu), family.d(nu)), w);
    }
  }
  if (trace != 0.0) out.add(PauliString(family.width()), trace);
  return out;
}

PauliSum heisenberg_observable(std::span<const GateExponent> gates, const Observable& obs,
                               const JwFamily& family) {
  return coefficients_to_pauli(heisenberg_coefficients(gates, obs, family.n()), family);
}

SimResult simulate_quadratic(std::span<const GateExponent> gates, const ProductState& state,
                             const Observable& obs, const SimOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = state.n();
  const Eigen::MatrixXcd b = heisenberg_coefficients(gates, obs, n);
  const JwFamily family(n, options.c0_mode);
  const ProductState psi =
      options.c0_mode == C0Mode::extra_line ? state.with_zero_line() : state;

  cplx value = 0.0;
  const int dim = 2 * n + 1;
  for (int mu = 0; mu < dim; ++mu) {
    value += b(mu, mu);
    for (int nu = mu + 1; nu < dim; ++nu) {
      const cplx w = b(mu, nu) - b(nu, mu);
      if (w == 0.0) continue;
      value += w * expectation(psi, pauli_mul(family.d(mu), family.d(nu)));
    }
  }

  SimResult result;
  result.expectation = value;
  result.engine = "quadratic";
  result.gates = static_cast<int>(gates.size());
  for (const GateExponent& g : gates) result.det_factor *= std::exp(g.s());
  finish_result(result, options);
  result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return result;
}

}  // namespace mgsim
