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

#include <random>
#include <vector>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "mgsim/circuit.hpp"
#include "mgsim/error.hpp"
#include "mgsim/jw.hpp"
#include "mgsim/random_circuit.hpp"
#include "test_support.hpp"

namespace mgsim {
namespace {

using testing::gaussian_complex;
using testing::gaussian_matrix;
using testing::max_abs;

TEST(DenseState, LineOneIsMostSignificant) {
  oracle::DenseState s(2);
  const std::vector<int> line1{1};
  s.apply(oracle::pauli_matrix(Pauli::X), line1);
  EXPECT_EQ(s.amplitudes()(2), cplx(1.0));
  EXPECT_EQ(s.amplitudes()(0), cplx(0.0));
  const std::vector<int> line2{2};
  s.apply(oracle::pauli_matrix(Pauli::X), line2);
  EXPECT_EQ(s.amplitudes()(3), cplx(1.0));
}

TEST(DenseState, FirstListedLineIsLocalMsb) {
  std::mt19937_64 rng(81);
  const Eigen::MatrixXcd m = gaussian_matrix(rng, 4, 4);
  const std::vector<int> reversed{2, 1};
  const std::vector<int> forward{1, 2};
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  EXPECT_LT(max_abs(oracle::embed_matrix(m, reversed, 2) - swap * m * swap), 1e-15);
  EXPECT_LT(max_abs(oracle::embed_matrix(m, forward, 2) - m), 1e-15);
}

TEST(DenseState, FromProductMatchesKronecker) {
  std::mt19937_64 rng(82);
  const ProductState p = testing::random_product_state(rng, 3);
  const auto s = oracle::DenseState::from_product(p);
  for (int idx = 0; idx < 8; ++idx) {
    const cplx expected = p.qubit(1)[(idx >> 2) & 1] * p.qubit(2)[(idx >> 1) & 1] *
                          p.qubit(3)[idx & 1];
    EXPECT_LT(std::abs(s.amplitudes()(idx) - expected), 1e-15);
  }
}

TEST(DenseState, RefusesLargeRegisters) {
  EXPECT_NO_THROW(oracle::DenseState(oracle::kMaxLines));
  EXPECT_THROW(oracle::DenseState(oracle::kMaxLines + 1), PreconditionError);
  EXPECT_THROW(oracle::DenseState(0), PreconditionError);
}

TEST(DenseState, RejectsBadPlacement) {
  oracle::DenseState s(3);
  const std::vector<int> twice{1, 1};
  const std::vector<int> outside{4};
  const std::vector<int> one{1};
  EXPECT_THROW(s.apply(Eigen::MatrixXcd::Identity(4, 4), twice), PreconditionError);
  EXPECT_THROW(s.apply(Eigen::MatrixXcd::Identity(2, 2), outside), PreconditionError);
  EXPECT_THROW(s.apply(Eigen::MatrixXcd::Identity(4, 4), one), DimensionError);
}

TEST(DenseMatrix, PauliStringKronecker) {
  const PauliString p = PauliString::from_string("XZ");
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 2) = 1.0;
  expected(1, 3) = -1.0;
  expected(2, 0) = 1.0;
  expected(3, 1) = -1.0;
  EXPECT_LT(max_abs(oracle::dense_matrix(p) - expected), 1e-15);
}

TEST(ExpGate, MatchesFullExponential) {
  std::mt19937_64 rng(83);
  const int n = 4;
  const JwFamily fam(n, C0Mode::parity);
  for (int t = 0; t < 10; ++t) {
    GateExponent g(n);
    const int k = 1 + t % 3;
    g.set_a(2 * k - 1, 2 * k + 2, 0.5 * gaussian_complex(rng));
    g.set_a(2 * k, 2 * k + 1, 0.5 * gaussian_complex(rng));
    g.set_s(0.2 * gaussian_complex(rng));
    if (k == 1) g.set_b(2, 0.5 * gaussian_complex(rng));
    const oracle::LocalGate local = oracle::exp_gate(g);
    const Eigen::MatrixXcd full = oracle::dense_matrix(to_pauli_sum(g, fam)).exp();
    EXPECT_LT(max_abs(oracle::embed_matrix(local.matrix, local.lines, n) - full), 1e-11);
  }
}

TEST(Expectation, ModesAgreeOnUnitaryCircuits) {
  std::mt19937_64 rng(84);
  for (int t = 0; t < 20; ++t) {
    RandomCircuitOptions opt;
    opt.n = 1 + t % 5;
    opt.depth = 12;
    const Circuit c = random_circuit(opt, rng);
    ASSERT_TRUE(c.unitary(1e-8));
    const auto gates = intended_gates(c);
    const Observable obs = Observable::z(c.measure);
    const cplx a = oracle::expectation(gates, c.state, obs, oracle::HeisenbergMode::inverse);
    const cplx b = oracle::expectation(gates, c.state, obs, oracle::HeisenbergMode::adjoint);
    EXPECT_LT(std::abs(a - b), 1e-10);
    EXPECT_LT(std::abs(a.imag()), 1e-10);
  }
}

TEST(Expectation, MatchesHeisenbergMatrix) {
  std::mt19937_64 rng(85);
  RandomCircuitOptions opt;
  opt.n = 3;
  opt.depth = 10;
  opt.nonunitary = 0.2;
  const Circuit c = random_circuit(opt, rng);
  const auto gates = intended_gates(c);
  const Observable obs = Observable::z(2);
  const Eigen::MatrixXcd h = oracle::heisenberg_matrix(gates, obs, c.n);
  const Eigen::VectorXcd psi = oracle::DenseState::from_product(c.state).amplitudes();
  const cplx direct = psi.dot(h * psi);
  EXPECT_LT(std::abs(direct - oracle::expectation(gates, c.state, obs)), 1e-10);
}

TEST(PauliExpand, RoundTrip) {
  std::mt19937_64 rng(86);
  const int n = 3;
  const Eigen::MatrixXcd m = gaussian_matrix(rng, 8, 8);
  const PauliSum s = oracle::pauli_expand(m, n);
  EXPECT_LT(max_abs(oracle::dense_matrix(s) - m), 1e-13);
  EXPECT_THROW(oracle::pauli_expand(gaussian_matrix(rng, 4, 4), n), DimensionError);
}

TEST(Simulate, ReportsDenseEngine) {
  const ProductState zeros = ProductState::zeros(2);
  const std::vector<oracle::LocalGate> none;
  const SimResult r =
      oracle::simulate(none, zeros, Observable::z(1), oracle::HeisenbergMode::inverse);
  EXPECT_EQ(r.engine, "dense");
  EXPECT_EQ(r.expectation, cplx(1.0));
  ASSERT_TRUE(r.p0.has_value());
  EXPECT_DOUBLE_EQ(*r.p0, 1.0);
  EXPECT_DOUBLE_EQ(*r.p1, 0.0);
}

}  // namespace
}  // namespace mgsim
