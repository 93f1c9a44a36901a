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

#include "mgsim/oracle.hpp"

#include <algorithm>
#include <chrono>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "mgsim/error.hpp"
#include "mgsim/jw.hpp"

namespace mgsim::oracle {

namespace {

void check_register(int n) {
  if (n < 1 || n > kMaxLines) {
    throw PreconditionError("dense simulation supports 1.." + std::to_string(kMaxLines) +
                            " lines, got " + std::to_string(n));
  }
}

}  // namespace

DenseState::DenseState(int n) : n_(n) {
  check_register(n);
  amp_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  amp_(0) = 1.0;
}

DenseState DenseState::from_product(const ProductState& state) {
  DenseState out(state.n());
  Eigen::VectorXcd v(1);
  v(0) = 1.0;
  for (int line = 1; line <= state.n(); ++line) {
    const auto& q = state.qubit(line);
    Eigen::VectorXcd next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * q[0];
      next(2 * i + 1) = v(i) * q[1];
    }
    v = std::move(next);
  }
  out.amp_ = std::move(v);
  return out;
}

void DenseState::apply(const Eigen::MatrixXcd& m, std::span<const int> lines) {
  const int k = static_cast<int>(lines.size());
  const Eigen::Index local = Eigen::Index{1} << k;
  if (m.rows() != local || m.cols() != local) {
    throw DimensionError("operator size does not match its line list");
  }
  std::vector<Eigen::Index> offset(local, 0);
  Eigen::Index mask = 0;
  for (int l = 0; l < k; ++l) {
    if (lines[l] < 1 || lines[l] > n_) throw PreconditionError("line outside the register");
    const Eigen::Index bit = Eigen::Index{1} << (n_ - lines[l]);
    if (mask & bit) throw PreconditionError("repeated line in operator placement");
    mask |= bit;
    for (Eigen::Index loc = 0; loc < local; ++loc) {
      if (loc & (Eigen::Index{1} << (k - 1 - l))) offset[loc] |= bit;
    }
  }
  Eigen::VectorXcd v(local);
  const Eigen::Index size = amp_.size();
  for (Eigen::Index base = 0; base < size; ++base) {
    if (base & mask) continue;
    for (Eigen::Index loc = 0; loc < local; ++loc) v(loc) = amp_(base | offset[loc]);
    const Eigen::VectorXcd w = m * v;
    for (Eigen::Index loc = 0; loc < local; ++loc) amp_(base | offset[loc]) = w(loc);
  }
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  const cplx i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -i, i, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
  check_register(p.n());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * p.scalar();
  for (int line = 1; line <= p.n(); ++line) {
    m = Eigen::kroneckerProduct(m, pauli_matrix(p.get(line))).eval();
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliSum& s) {
  check_register(s.n());
  const Eigen::Index dim = Eigen::Index{1} << s.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : s.terms()) m += c * dense_matrix(p);
  return m;
}

Eigen::MatrixXcd embed_matrix(const Eigen::MatrixXcd& m, std::span<const int> lines, int n) {
  check_register(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    DenseState s(n);
    s.amplitudes().setZero();
    s.amplitudes()(col) = 1.0;
    s.apply(m, lines);
    out.col(col) = s.amplitudes();
  }
  return out;
}

LocalGate exp_gate(const GateExponent& g) {
  const int n = g.n();
  std::vector<int> lines = g.line_support();
  if (lines.empty()) lines = {1};
  const int lo = *std::min_element(lines.begin(), lines.end());
  const int hi = *std::max_element(lines.begin(), lines.end());
  const int w = hi - lo + 1;
  check_register(w);

  auto restrict = [&](const PauliString& p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * p.scalar();
    for (int line = 1; line <= n; ++line) {
      if (line < lo || line > hi) {
        if (p.get(line) != Pauli::I) {
          throw ConsistencyError("generator reaches outside the gate's line support");
        }
        continue;
      }
      m = Eigen::kroneckerProduct(m, pauli_matrix(p.get(line))).eval();
    }
    return m;
  };

  const Eigen::Index dim = Eigen::Index{1} << w;
  Eigen::MatrixXcd a = g.s() * Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& [key, v] : g.quadratic()) {
    a += 2.0 * v * restrict(pauli_mul(jw(n, key.first), jw(n, key.second)));
  }
  for (const auto& [sigma, v] : g.linear()) a += v * restrict(jw(n, sigma));

  LocalGate out;
  out.matrix = a.exp();
  for (int line = lo; line <= hi; ++line) out.lines.push_back(line);
  return out;
}

namespace {

LocalGate observable_gate(const Observable& obs, int n) {
  const PauliString p = obs.pauli(n);
  for (int line = 1; line <= n; ++line) {
    if (p.get(line) != Pauli::I) return {pauli_matrix(p.get(line)), {line}};
  }
  throw std::logic_error("observable is the identity");
}

Eigen::MatrixXcd inverse_adjoint(const Eigen::MatrixXcd& m) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  if (!lu.isInvertible()) throw PreconditionError("gate matrix is singular");
  return lu.inverse().adjoint();
}

}  // namespace

cplx expectation(std::span<const LocalGate> gates, const ProductState& state,
                 const Observable& obs, HeisenbergMode mode) {
  const DenseState psi = DenseState::from_product(state);
  DenseState phi = psi;
  for (const LocalGate& g : gates) phi.apply(g);
  DenseState chi = phi;
  if (mode == HeisenbergMode::inverse) {
    chi = psi;
    for (const LocalGate& g : gates) chi.apply(inverse_adjoint(g.matrix), g.lines);
  }
  phi.apply(observable_gate(obs, state.n()));
  return chi.amplitudes().dot(phi.amplitudes());
}

Eigen::MatrixXcd heisenberg_matrix(std::span<const LocalGate> gates, const Observable& obs,
                                   int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Identity(dim, dim);
  for (const LocalGate& g : gates) c = embed_matrix(g.matrix, g.lines, n) * c;
  const Eigen::MatrixXcd o = dense_matrix(obs.pauli(n));
  return c.fullPivLu().inverse() * o * c;
}

PauliSum pauli_expand(const Eigen::MatrixXcd& m, int n) {
  check_register(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (m.rows() != dim || m.cols() != dim) throw DimensionError("matrix size is not 2^n");
  PauliSum out(n);
  const Pauli order[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const long long total = 1LL << (2 * n);
  for (long long code = 0; code < total; ++code) {
    PauliString p(n);
    long long c = code;
    for (int line = n; line >= 1; --line) {
      p.set(line, order[c & 3]);
      c >>= 2;
    }
    const cplx coeff = (dense_matrix(p) * m).trace() / static_cast<double>(dim);
    out.add(p, coeff);
  }
  return out;
}

SimResult simulate(std::span<const LocalGate> gates, const ProductState& state,
                   const Observable& obs, HeisenbergMode mode, const SimOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SimResult result;
  result.expectation = expectation(gates, state, obs, mode);
  result.engine = "dense";
  result.gates = static_cast<int>(gates.size());
  finish_result(result, options);
  result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return result;
}

}  // namespace mgsim::oracle
