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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mgsim/exponents.hpp"
#include "mgsim/matchgate4.hpp"
#include "mgsim/oracle.hpp"
#include "mgsim/pauli.hpp"
#include "mgsim/sim.hpp"

namespace mgsim {

/// G(V, W) on nearest-neighbour lines (k, k+1).
struct GvwGate {
  int k = 1;
  Mat2 v = Mat2::Identity();
  Mat2 w = Mat2::Identity();
  friend bool operator==(const GvwGate&, const GvwGate&) = default;
};

/// diag(d1, d2, d3, d4) on lines k < l.
struct DiagGate {
  int k = 1;
  int l = 2;
  std::array<cplx, 4> d{1.0, 1.0, 1.0, 1.0};
  friend bool operator==(const DiagGate&, const DiagGate&) = default;
};

/// Matchgate on lines 1 and 2, in the labelling of the matchgate
/// identities (see compile_mg12).
struct Mg12Gate {
  Mat4 b = Mat4::Identity();
  friend bool operator==(const Mg12Gate&, const Mg12Gate&) = default;
};

/// One-line gate on line 1.
struct U1Gate {
  Mat2 u = Mat2::Identity();
  friend bool operator==(const U1Gate&, const U1Gate&) = default;
};

/// Raw exponent exp(A).
struct ExpGate {
  GateExponent a;
  friend bool operator==(const ExpGate&, const ExpGate&) = default;
};

using GateRecord = std::variant<GvwGate, DiagGate, Mg12Gate, U1Gate, ExpGate>;

/// "gvw", "diag", "mg12", "u1" or "exp".
std::string gate_class(const GateRecord& g);

/// Lines the gate acts on, in the order its matrix is written.
std::vector<int> gate_lines(const GateRecord& g);

/// Checks the class constraints on an n-line register; throws
/// GateClassError naming the violated rule.
void validate_gate(const GateRecord& g, int n, double tol = kMatchgateTol);

/// True when the gate matrix is unitary within tol.
bool gate_is_unitary(const GateRecord& g, double tol = 1e-9);

struct Circuit {
  int n = 0;
  ProductState state;
  std::vector<GateRecord> gates;
  int measure = 1;

  bool unitary(double tol = 1e-9) const;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Complex literals: "a", "bi", "a+bi", "i", "-i".
cplx parse_complex(std::string_view text);
/// Canonical 17-significant-digit literal; parse_complex inverts it exactly.
std::string render_complex(cplx z);

/// Parses the line-oriented circuit format. Syntax errors raise ParseError,
/// class violations GateClassError.
Circuit parse_circuit(std::string_view text);
std::string render_circuit(const Circuit& c);

GateExponent compile_gate(const GateRecord& g, int n);
/// Throws CompileError carrying the failing gate's index.
std::vector<GateExponent> compile(const Circuit& c);

/// The gate as written, on its own lines, for the dense oracle.
oracle::LocalGate intended_gate(const GateRecord& g, int n);
std::vector<oracle::LocalGate> intended_gates(const Circuit& c);

/// Gate classes a 2x2 or 4x4 matrix fits ("u1" for 2x2; "diag", "gvw",
/// "mg12" for 4x4).
std::vector<std::string> classify_matrix(const Eigen::MatrixXcd& m, double tol = kMatchgateTol);

enum class Engine { quadratic, lie, dense };

std::string engine_name(Engine e);

struct RunOptions {
  Engine engine = Engine::quadratic;
  double tol = 1e-9;
  C0Mode c0_mode = C0Mode::parity;
  oracle::HeisenbergMode heisenberg_mode = oracle::HeisenbergMode::inverse;
  /// Overrides the circuit's measured line when set to X1 or Y1.
  std::optional<Observable> observable;
};

SimResult run_circuit(const Circuit& c, const RunOptions& options);

}  // namespace mgsim
