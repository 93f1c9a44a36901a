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

#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "mgsim/circuit.hpp"
#include "mgsim/error.hpp"
#include "mgsim/oracle.hpp"
#include "mgsim/random_circuit.hpp"
#include "test_support.hpp"

namespace mgsim {
namespace {

using testing::gaussian_complex;
using testing::max_abs;

GateExponent random_exponent(std::mt19937_64& rng, int n, double nonunitary) {
  std::uniform_int_distribution<int> idx(1, 2 * n);
  GateExponent g(n);
  for (int t = 0; t < 3; ++t) {
    const int mu = idx(rng);
    const int nu = idx(rng);
    if (mu != nu) g.add_a(mu, nu, cplx(0.5 * gaussian_complex(rng).real(), nonunitary * gaussian_complex(rng).real()));
    g.add_b(idx(rng), cplx(nonunitary * gaussian_complex(rng).real(), 0.5 * gaussian_complex(rng).real()));
  }
  g.set_s(cplx(0.0, 0.3));
  return g;
}

TEST(GateTransfer, OrthogonalAndLocal) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 50; ++t) {
    const GateExponent g = random_exponent(rng, 5, t % 2 ? 0.3 : 0.0);
    const TransferMatrix k = gate_transfer(g);
    EXPECT_EQ(k.dim, 11);
    const Eigen::MatrixXcd full = k.dense();
    EXPECT_LT(max_abs(full * full.transpose() - Eigen::MatrixXcd::Identity(11, 11)), 1e-12);
    for (int i = 0; i < 11; ++i) {
      if (std::find(k.support.begin(), k.support.end(), i) == k.support.end()) {
        EXPECT_EQ(full(i, i), 1.0);
      }
    }
    EXPECT_LT(std::abs(k.det_factor - std::exp(g.s())), 1e-15);
  }
}

TEST(GateTransfer, ConjugatesDOperators) {
  std::mt19937_64 rng(62);
  const int n = 3;
  for (C0Mode mode : {C0Mode::parity, C0Mode::extra_line}) {
    const JwFamily f(n, mode);
    for (int t = 0; t < 10; ++t) {
      const GateExponent g = random_exponent(rng, n, 0.3);
      const oracle::LocalGate local = oracle::exp_gate(g);
      Eigen::MatrixXcd e = oracle::embed_matrix(local.matrix, local.lines, n);
      if (mode == C0Mode::extra_line) {
        e = Eigen::kroneckerProduct(e, Eigen::MatrixXcd::Identity(2, 2)).eval();
      }
      const Eigen::MatrixXcd e_inv = e.inverse();
      const Eigen::MatrixXcd k = gate_transfer(g).dense();
      for (int sigma = 0; sigma <= 2 * n; ++sigma) {
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(e.rows(), e.cols());
        for (int nu = 0; nu <= 2 * n; ++nu) rhs += k(sigma, nu) * oracle::dense_matrix(f.d(nu));
        EXPECT_LT(max_abs(e * oracle::dense_matrix(f.d(sigma)) * e_inv - rhs), 1e-11);
      }
    }
  }
}

TEST(ObservableCoefficients, ExpandToPaulis) {
  const int n = 3;
  for (C0Mode mode : {C0Mode::parity, C0Mode::extra_line}) {
    const JwFamily f(n, mode);
    for (const Observable& obs : {Observable::z(1), Observable::z(3), Observable::x1(),
                                  Observable::y1()}) {
      const PauliSum s = coefficients_to_pauli(observable_coefficients(obs, n), f);
      PauliSum expected(f.width());
      PauliString p = obs.pauli(n);
      PauliString wide(f.width());
      for (int line = 1; line <= n; ++line) wide.set(line, p.get(line));
      expected.add(wide);
      EXPECT_LT(s.max_abs_diff(expected), 1e-15) << obs.str();
    }
  }
  EXPECT_THROW(observable_coefficients(Observable::z(4), 3), PreconditionError);
}

TEST(HeisenbergObservable, MatchesDenseConjugation) {
  std::mt19937_64 rng(63);
  const int n = 3;
  for (C0Mode mode : {C0Mode::parity, C0Mode::extra_line}) {
    const JwFamily f(n, mode);
    for (int t = 0; t < 8; ++t) {
      std::vector<GateExponent> gates;
      std::vector<oracle::LocalGate> locals;
      for (int i = 0; i < 5; ++i) {
        gates.push_back(random_exponent(rng, n, 0.2));
        locals.push_back(oracle::exp_gate(gates.back()));
      }
      const Observable obs = Observable::z(1 + t % n);
      PauliSum got = heisenberg_observable(gates, obs, f);
      const PauliSum expected = oracle::pauli_expand(oracle::heisenberg_matrix(locals, obs, n), n);
      if (mode == C0Mode::extra_line) {
        // Every term must act trivially on the extra line.
        PauliSum narrowed(n);
        for (const auto& [p, c] : got.terms()) {
          ASSERT_EQ(p.get(n + 1), Pauli::I);
          PauliString q(n);
          for (int line = 1; line <= n; ++line) q.set(line, p.get(line));
          narrowed.add(q, c);
        }
        got = narrowed;
      }
      EXPECT_LT(got.max_abs_diff(expected), 1e-10);
    }
  }
}

TEST(SimulateQuadratic, BasisStates) {
  const std::vector<GateExponent> none;
  const ProductState s({ProductState::named("0"), ProductState::named("1"),
                        ProductState::named("+")});
  EXPECT_NEAR(simulate_quadratic(none, s, Observable::z(1)).expectation.real(), 1.0, 1e-15);
  EXPECT_NEAR(simulate_quadratic(none, s, Observable::z(2)).expectation.real(), -1.0, 1e-15);
  EXPECT_NEAR(simulate_quadratic(none, s, Observable::z(3)).expectation.real(), 0.0, 1e-15);
  const ProductState p({ProductState::named("+"), ProductState::named("0")});
  EXPECT_NEAR(simulate_quadratic(none, p, Observable::x1()).expectation.real(), 1.0, 1e-15);
  const ProductState y({ProductState::named("i"), ProductState::named("0")});
  EXPECT_NEAR(simulate_quadratic(none, y, Observable::y1()).expectation.real(), 1.0, 1e-15);
}

TEST(SimulateQuadratic, ResultFields) {
  const double h = 0.7071067811865476;
  Mat2 u;
  u << h, h, h, -h;
  const std::vector<GateExponent> gates{compile_u1(u, 2)};
  for (C0Mode mode : {C0Mode::parity, C0Mode::extra_line}) {
    SimOptions opt;
    opt.c0_mode = mode;
    const SimResult r = simulate_quadratic(gates, ProductState::zeros(2), Observable::x1(), opt);
    EXPECT_NEAR(r.expectation.real(), 1.0, 1e-12);
    ASSERT_TRUE(r.p0 && r.p1);
    EXPECT_NEAR(*r.p0, 1.0, 1e-12);
    EXPECT_NEAR(*r.p0 + *r.p1, 1.0, 1e-15);
    EXPECT_EQ(r.engine, "quadratic");
    EXPECT_EQ(r.gates, 1);
  }
}

TEST(SimulateQuadratic, MatchesOracleOnRandomCircuits) {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 60; ++t) {
    RandomCircuitOptions opt;
    opt.n = 1 + t % 6;
    opt.depth = 15;
    opt.nonunitary = t % 3 == 0 ? 0.2 : 0.0;
    const Circuit c = random_circuit(opt, rng);
    const std::vector<GateExponent> gates = compile(c);
    const std::vector<oracle::LocalGate> locals = intended_gates(c);
    const Observable obs = Observable::z(c.measure);
    const cplx expected = oracle::expectation(locals, c.state, obs);
    for (C0Mode mode : {C0Mode::parity, C0Mode::extra_line}) {
      SimOptions so;
      so.c0_mode = mode;
      EXPECT_LT(std::abs(simulate_quadratic(gates, c.state, obs, so).expectation - expected), 1e-9);
    }
    const cplx x1 = oracle::expectation(locals, c.state, Observable::x1());
    EXPECT_LT(std::abs(simulate_quadratic(gates, c.state, Observable::x1()).expectation - x1), 1e-9);
  }
}

TEST(SimulateQuadratic, Errors) {
  const std::vector<GateExponent> gates{GateExponent(3)};
  EXPECT_THROW(simulate_quadratic(gates, ProductState::zeros(2), Observable::z(1)),
               DimensionError);
  EXPECT_THROW(simulate_quadratic({}, ProductState::zeros(2), Observable::z(5)),
               PreconditionError);
}

TEST(FinishResult, DeclaredUnitaryRejectsComplex) {
  SimResult r;
  r.expectation = cplx(0.5, 0.25);
  SimOptions opt;
  finish_result(r, opt);
  EXPECT_FALSE(r.p0.has_value());
  opt.declared_unitary = true;
  EXPECT_THROW(finish_result(r, opt), ConsistencyError);
  r.expectation = cplx(0.5, 1e-13);
  finish_result(r, opt);
  ASSERT_TRUE(r.p0.has_value());
  EXPECT_DOUBLE_EQ(*r.p0, 0.75);
}

}  // namespace
}  // namespace mgsim
