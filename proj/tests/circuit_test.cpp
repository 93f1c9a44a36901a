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

#include "mgsim/circuit.hpp"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "mgsim/error.hpp"
#include "mgsim/random_circuit.hpp"
#include "test_support.hpp"

namespace mgsim {
namespace {

using testing::max_abs;

Eigen::MatrixXcd product(const std::vector<oracle::LocalGate>& gates, int n) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
  for (const auto& g : gates) u = oracle::embed_matrix(g.matrix, g.lines, n) * u;
  return u;
}

Eigen::MatrixXcd compiled_product(const Circuit& c) {
  std::vector<oracle::LocalGate> gates;
  for (const GateExponent& g : compile(c)) gates.push_back(oracle::exp_gate(g));
  return product(gates, c.n);
}

TEST(ParseCircuit, Minimal) {
  const Circuit c = parse_circuit("circuit n=2\nmeasure 2\n");
  EXPECT_EQ(c.n, 2);
  EXPECT_EQ(c.state, ProductState::zeros(2));
  EXPECT_TRUE(c.gates.empty());
  EXPECT_EQ(c.measure, 2);
}

TEST(ParseCircuit, DefaultsAndComments) {
  const Circuit c = parse_circuit("# header comment\ncircuit n=3   # three lines\nstate 0 + -i\n");
  EXPECT_EQ(c.measure, 1);
  EXPECT_EQ(c.state.qubit(2), ProductState::named("+"));
  EXPECT_EQ(c.state.qubit(3), ProductState::named("-i"));
}

TEST(ParseCircuit, StateForms) {
  EXPECT_EQ(parse_circuit("circuit n=3\nstate 0+1\n").state,
            parse_circuit("circuit n=3\nstate 0 + 1\n").state);
  const Circuit c = parse_circuit("circuit n=1\nstate (0.6,0)(0,0.8)\n");
  EXPECT_EQ(c.state.qubit(1)[0], cplx(0.6));
  EXPECT_EQ(c.state.qubit(1)[1], cplx(0, 0.8));
  EXPECT_THROW(parse_circuit("circuit n=1\nstate (1,0)(1,0)\n"), ParseError);
  EXPECT_THROW(parse_circuit("circuit n=2\nstate 0\n"), ParseError);
}

TEST(ParseCircuit, HadamardOnLineOne) {
  const Circuit c = parse_circuit(
      "circuit n=2\n"
      "gate u1 1 U=[0.70710678118654752,0.70710678118654752;0.70710678118654752,"
      "-0.70710678118654752]\n"
      "measure 1\n");
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(gate_class(c.gates[0]), "u1");
  RunOptions opt;
  for (Engine e : {Engine::quadratic, Engine::lie, Engine::dense}) {
    opt.engine = e;
    const SimResult r = run_circuit(c, opt);
    EXPECT_LT(std::abs(r.expectation), 1e-12) << engine_name(e);
    ASSERT_TRUE(r.p0.has_value());
    EXPECT_NEAR(*r.p0, 0.5, 1e-12);
  }
}

TEST(ParseCircuit, RejectsNonMatchgateDiagonal) {
  try {
    parse_circuit("circuit n=3\ngate diag 1 3 [1,1,1,-1]\n");
    FAIL() << "accepted a diagonal that violates the matchgate condition";
  } catch (const GateClassError& e) {
    EXPECT_EQ(e.rule(), "B11 B44 = B22 B33");
  }
}

TEST(ParseCircuit, GateClassRules) {
  auto rule_of = [](const std::string& text) -> std::string {
    try {
      parse_circuit(text);
    } catch (const GateClassError& e) {
      return e.rule();
    }
    return "";
  };
  EXPECT_EQ(rule_of("circuit n=3\ngate gvw 1 3 V=[1,0;0,1] W=[1,0;0,1]\n"),
            "nearest-neighbour lines");
  EXPECT_EQ(rule_of("circuit n=3\ngate gvw 3 V=[1,0;0,1] W=[1,0;0,1]\n"),
            "nearest-neighbour lines");
  EXPECT_EQ(rule_of("circuit n=2\ngate gvw 1 V=[2,0;0,1] W=[1,0;0,1]\n"), "det V = det W");
  EXPECT_EQ(rule_of("circuit n=3\ngate mg12 2 3 B=[1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1]\n"),
            "lines (1,2) only");
  EXPECT_EQ(rule_of("circuit n=2\ngate mg12 B=[1,0,0,0;0,0,1,0;0,1,0,0;0,0,0,1]\n"),
            "matchgate identities");
  EXPECT_EQ(rule_of("circuit n=2\ngate u1 2 U=[1,0;0,1]\n"), "line 1 only");
  EXPECT_EQ(rule_of("circuit n=2\ngate u1 U=[1,1;1,1]\n"), "invertible");
  EXPECT_EQ(rule_of("circuit n=3\ngate diag 2 1 [1,1,1,1]\n"), "line pair k < l");
  try {
    validate_gate(ExpGate{GateExponent(4)}, 5);
    FAIL();
  } catch (const GateClassError& e) {
    EXPECT_EQ(e.rule(), "exponent line count");
  }
}

TEST(ParseCircuit, ErrorPositions) {
  try {
    parse_circuit("circuit n=2\ngate foo 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 6);
  }
  EXPECT_THROW(parse_circuit("gate u1 U=[1,0;0,1]\n"), ParseError);
  EXPECT_THROW(parse_circuit("circuit n=2\nmeasure 1\ngate u1 U=[1,0;0,1]\n"), ParseError);
  EXPECT_THROW(parse_circuit("circuit n=2\nmeasure 3\n"), ParseError);
  EXPECT_THROW(parse_circuit("circuit n=2\ngate exp a[1,1]=1\n"), ParseError);
  EXPECT_THROW(parse_circuit("circuit n=2\ngate exp s=1 s=2\n"), ParseError);
  EXPECT_THROW(parse_circuit("circuit n=0\n"), ParseError);
}

TEST(ComplexLiteral, RoundTrip) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 200; ++t) {
    const cplx z = testing::gaussian_complex(rng) * std::pow(10.0, t % 11 - 5);
    EXPECT_EQ(parse_complex(render_complex(z)), z);
  }
  EXPECT_EQ(parse_complex("i"), cplx(0, 1));
  EXPECT_EQ(parse_complex("-2.5i"), cplx(0, -2.5));
  EXPECT_EQ(parse_complex("1-2i"), cplx(1, -2));
  EXPECT_EQ(parse_complex("3"), cplx(3, 0));
  EXPECT_THROW(parse_complex("1+"), PreconditionError);
}

TEST(RenderCircuit, RoundTripProperty) {
  std::mt19937_64 rng(92);
  for (int t = 0; t < 100; ++t) {
    RandomCircuitOptions opt;
    opt.n = 1 + t % 6;
    opt.depth = 8;
    opt.nonunitary = t % 3 == 0 ? 0.1 : 0.0;
    const Circuit c = random_circuit(opt, rng);
    EXPECT_EQ(parse_circuit(render_circuit(c)), c);
  }
}

TEST(Compile, MixedCircuitReproducesGates) {
  const Circuit c = parse_circuit(
      "circuit n=3\n"
      "state 0 + 1\n"
      "gate u1 U=[0.6,0.8i;0.8i,0.6]\n"
      "gate gvw 2 V=[0.8,0.6;-0.6,0.8] W=[1i,0;0,-1i]\n"
      "gate diag 1 3 [1,1i,-1i,1]\n"
      "gate mg12 B=[1,0,0,0;0,0.6,0.8,0;0,-0.8,0.6,0;0,0,0,1]\n"
      "gate exp a[2,5]=0.3 a[1,3]=-0.2 b[2]=0.4i s=0.1i\n"
      "measure 2\n");
  ASSERT_EQ(c.gates.size(), 5u);
  EXPECT_LT(max_abs(compiled_product(c) - product(intended_gates(c), c.n)), 1e-9);
}

TEST(Compile, RandomCircuitsReproduceGates) {
  std::mt19937_64 rng(93);
  for (int t = 0; t < 40; ++t) {
    RandomCircuitOptions opt;
    opt.n = 2 + t % 3;
    opt.depth = 6;
    opt.nonunitary = t % 2 ? 0.2 : 0.0;
    const Circuit c = random_circuit(opt, rng);
    EXPECT_LT(max_abs(compiled_product(c) - product(intended_gates(c), c.n)), 1e-9);
  }
}

TEST(Compile, ErrorCarriesGateIndex) {
  Circuit c;
  c.n = 3;
  c.state = ProductState::zeros(3);
  c.gates.push_back(U1Gate{});
  c.gates.push_back(GvwGate{});
  c.gates.push_back(GvwGate{2, Mat2::Identity(), Mat2::Identity() * 2.0});
  try {
    compile(c);
    FAIL();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.index(), 2);
  }
}

TEST(ClassifyMatrix, Classes) {
  EXPECT_EQ(classify_matrix(Eigen::MatrixXcd::Identity(2, 2)),
            (std::vector<std::string>{"u1"}));
  const auto id = classify_matrix(Eigen::MatrixXcd::Identity(4, 4));
  EXPECT_EQ(id, (std::vector<std::string>{"diag", "gvw", "mg12"}));
  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  EXPECT_TRUE(classify_matrix(swap).empty());
  EXPECT_TRUE(classify_matrix(Eigen::MatrixXcd::Zero(4, 4)).empty());
  EXPECT_THROW(classify_matrix(Eigen::MatrixXcd::Identity(3, 3)), DimensionError);
}

TEST(RunCircuit, AdjointModeNeedsDenseEngine) {
  const Circuit c = parse_circuit("circuit n=1\n");
  RunOptions opt;
  opt.heisenberg_mode = oracle::HeisenbergMode::adjoint;
  opt.engine = Engine::lie;
  EXPECT_THROW(run_circuit(c, opt), PreconditionError);
  opt.engine = Engine::dense;
  EXPECT_EQ(run_circuit(c, opt).expectation, cplx(1.0));
}

TEST(RunCircuit, ObservableOverride) {
  const Circuit c = parse_circuit("circuit n=2\nstate + 0\n");
  RunOptions opt;
  opt.observable = Observable::x1();
  for (Engine e : {Engine::quadratic, Engine::lie, Engine::dense}) {
    opt.engine = e;
    EXPECT_LT(std::abs(run_circuit(c, opt).expectation - 1.0), 1e-12) << engine_name(e);
  }
}

}  // namespace
}  // namespace mgsim
