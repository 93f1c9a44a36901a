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

#include "mgsim/engine_lie.hpp"

#include <future>
#include <random>

#include <gtest/gtest.h>

#include "mgsim/circuit.hpp"
#include "mgsim/engine_quadratic.hpp"
#include "mgsim/error.hpp"
#include "mgsim/oracle.hpp"
#include "mgsim/random_circuit.hpp"
#include "test_support.hpp"

namespace mgsim {
namespace {

using testing::gaussian_complex;
using testing::max_abs;

TEST(LieBasis, Dimension) {
  for (int n = 1; n <= 6; ++n) {
    const LieBasis b(n);
    EXPECT_EQ(b.dim(), n * (2 * n + 1) + 1);
    EXPECT_TRUE(b.element(b.identity_index()).is_identity());
  }
}

TEST(LieBasis, IndexRoundTrip) {
  const LieBasis b(4);
  for (int mu = 1; mu <= 8; ++mu) {
    EXPECT_EQ(b.generators(b.linear_index(mu)), std::make_pair(mu, 0));
    for (int nu = mu + 1; nu <= 8; ++nu) {
      const int i = b.quadratic_index(mu, nu);
      EXPECT_EQ(b.generators(i), std::make_pair(mu, nu));
      EXPECT_EQ(b.quadratic_index(nu, mu), i);
    }
  }
  EXPECT_THROW(b.quadratic_index(3, 3), PreconditionError);
}

TEST(LieBasis, ElementsAreHermitianAndLocatable) {
  const LieBasis b(3);
  for (int i = 0; i < b.dim(); ++i) {
    EXPECT_TRUE(b.element(i).is_hermitian());
    PauliString p = b.element(i);
    p.mul_i(1);
    int k = -1;
    cplx factor = 0.0;
    ASSERT_TRUE(b.locate(p, k, factor));
    EXPECT_EQ(k, i);
    EXPECT_EQ(factor, cplx(0, 1));
  }
  int k = 0;
  cplx factor = 0.0;
  EXPECT_FALSE(b.locate(PauliString::from_string("XXX"), k, factor));
}

TEST(StructureConstants, LazyRowsMatchExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    const LieAlgebra alg(n);
    const StructureConstants sc = structure_constants(alg.basis());
    for (int j = 0; j < alg.dim(); ++j) {
      const auto& row = alg.row(j);
      ASSERT_EQ(row.size(), sc.by_left[j].size()) << "n=" << n << " j=" << j;
      for (std::size_t e = 0; e < row.size(); ++e) {
        EXPECT_EQ(row[e].i, sc.by_left[j][e].i);
        EXPECT_EQ(row[e].k, sc.by_left[j][e].k);
        EXPECT_EQ(row[e].value, sc.by_left[j][e].value);
      }
    }
  }
}

TEST(StructureConstants, Antisymmetric) {
  const LieBasis b(3);
  const StructureConstants sc = structure_constants(b);
  for (int j = 0; j < b.dim(); ++j) {
    for (const StructureEntry& e : sc.by_left[j]) EXPECT_EQ(sc.get(e.i, j, e.k), -e.value);
  }
}

TEST(AdjointTransfer, MatchesDenseConjugation) {
  std::mt19937_64 rng(71);
  const int n = 2;
  const LieAlgebra alg(n);
  for (int t = 0; t < 10; ++t) {
    GateExponent g(n);
    g.set_a(1, 3, 0.4 * gaussian_complex(rng));
    g.set_a(2, 4, 0.4 * gaussian_complex(rng));
    g.set_b(1, 0.4 * gaussian_complex(rng));
    g.set_s(0.1 * gaussian_complex(rng));
    const Eigen::MatrixXcd e = adjoint_transfer(lie_coefficients(g, alg.basis()), alg);
    const oracle::LocalGate local = oracle::exp_gate(g);
    const Eigen::MatrixXcd u = oracle::embed_matrix(local.matrix, local.lines, n);
    const Eigen::MatrixXcd u_inv = u.inverse();
    for (int i = 0; i < alg.dim(); ++i) {
      Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(4, 4);
      for (int k = 0; k < alg.dim(); ++k) {
        rhs += e(i, k) * oracle::dense_matrix(alg.basis().element(k));
      }
      const Eigen::MatrixXcd lhs = u * oracle::dense_matrix(alg.basis().element(i)) * u_inv;
      EXPECT_LT(max_abs(lhs - rhs), 1e-11);
    }
  }
}

TEST(LieCoefficients, ReproduceExponent) {
  std::mt19937_64 rng(72);
  const int n = 3;
  const LieBasis b(n);
  GateExponent g(n);
  g.set_a(1, 5, gaussian_complex(rng));
  g.set_b(3, gaussian_complex(rng));
  g.set_s(gaussian_complex(rng));
  const Eigen::VectorXcd xi = lie_coefficients(g, b);
  PauliSum s(n);
  for (int j = 0; j < b.dim(); ++j) {
    if (xi(j) != 0.0) s.add(b.element(j), xi(j));
  }
  EXPECT_LT(s.max_abs_diff(to_pauli_sum(g, JwFamily(n, C0Mode::parity))), 1e-14);
}

TEST(SimulateLie, AgreesWithQuadratic) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 60; ++t) {
    RandomCircuitOptions opt;
    opt.n = 1 + t % 7;
    opt.depth = 20;
    opt.nonunitary = t % 2 ? 0.15 : 0.0;
    const Circuit c = random_circuit(opt, rng);
    const auto gates = compile(c);
    for (const Observable& obs : {Observable::z(c.measure), Observable::x1(), Observable::y1()}) {
      const cplx q = simulate_quadratic(gates, c.state, obs).expectation;
      const SimResult l = simulate_lie(gates, c.state, obs);
      EXPECT_LT(std::abs(q - l.expectation), 1e-9);
      EXPECT_EQ(l.engine, "lie");
    }
  }
}

TEST(SimulateLie, CacheIsSharedAndThreadSafe) {
  EXPECT_EQ(lie_algebra(5).get(), lie_algebra(5).get());
  std::mt19937_64 rng(74);
  RandomCircuitOptions opt;
  opt.n = 6;
  opt.depth = 40;
  const Circuit c = random_circuit(opt, rng);
  const auto gates = compile(c);
  const cplx reference = simulate_quadratic(gates, c.state, Observable::z(2)).expectation;
  std::vector<std::future<cplx>> jobs;
  for (int t = 0; t < 4; ++t) {
    jobs.push_back(std::async(std::launch::async, [&] {
      return simulate_lie(gates, c.state, Observable::z(2)).expectation;
    }));
  }
  for (auto& j : jobs) EXPECT_LT(std::abs(j.get() - reference), 1e-9);
}

}  // namespace
}  // namespace mgsim
