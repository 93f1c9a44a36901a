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

#include <complex>
#include <optional>
#include <string>

#include "mgsim/jw.hpp"
#include "mgsim/pauli.hpp"

namespace mgsim {

/// Observables whose Heisenberg evolution stays inside the linear plus
/// quadratic Jordan-Wigner span: Z on any line, X or Y on line 1.
struct Observable {
  enum class Kind { z, x1, y1 };
  Kind kind = Kind::z;
  int line = 1;

  static Observable z(int k) { return {Kind::z, k}; }
  static Observable x1() { return {Kind::x1, 1}; }
  static Observable y1() { return {Kind::y1, 1}; }

  /// The observable as a Pauli string on n lines.
  PauliString pauli(int n) const;
  std::string str() const;

  friend bool operator==(const Observable&, const Observable&) = default;
};

struct SimOptions {
  C0Mode c0_mode = C0Mode::parity;
  /// Imaginary parts up to tol * max(1, |<O>|) count as real.
  double tol = 1e-9;
  /// When set, a complex expectation raises ConsistencyError.
  bool declared_unitary = false;
};

/// Output of every engine. p0/p1 are filled only when the expectation is
/// real within tolerance; det_factor is prod_i exp(s_i) over the gate
/// scalars, which cancel under conjugation.
struct SimResult {
  cplx expectation = 0.0;
  std::optional<double> p0;
  std::optional<double> p1;
  std::string engine;
  int gates = 0;
  double ms = 0.0;
  cplx det_factor = 1.0;
};

/// Fills p0/p1 from the expectation and enforces declared unitarity.
void finish_result(SimResult& result, const SimOptions& options);

}  // namespace mgsim
