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
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mgsim/jw.hpp"
#include "mgsim/matchgate4.hpp"
#include "mgsim/pauli.hpp"

namespace mgsim {

/// A gate exponent over the Jordan-Wigner generators of n lines:
///
///   A = sum_{mu<nu} 2 a_{mu nu} c_mu c_nu + sum_sigma b_sigma c_sigma + s I
///
/// with a antisymmetric. Only entries that were set are stored (strict
/// upper triangle for a), so a gate touching a few generators stays small
/// regardless of n. Indices are 1-based, 1..2n.
class GateExponent {
 public:
  GateExponent() = default;
  explicit GateExponent(int n);

  int n() const { return n_; }

  /// a_{mu nu}; a(nu, mu) = -a(mu, nu) and a(mu, mu) = 0.
  cplx a(int mu, int nu) const;
  void set_a(int mu, int nu, cplx value);
  void add_a(int mu, int nu, cplx value);

  cplx b(int sigma) const;
  void set_b(int sigma, cplx value);
  void add_b(int sigma, cplx value);

  cplx s() const { return s_; }
  void set_s(cplx value) { s_ = value; }

  /// Stored a_{mu nu} with mu < nu.
  const std::map<std::pair<int, int>, cplx>& quadratic() const { return a_; }
  const std::map<int, cplx>& linear() const { return b_; }

  /// Generator indices with a stored coefficient, sorted.
  std::vector<int> generator_support() const;
  /// Lines on which A acts non-trivially, including Jordan-Wigner Z strings
  /// (a linear term on line k touches lines 1..k).
  std::vector<int> line_support() const;

  /// a real, b imaginary and Re s = 0 up to tol relative to the largest
  /// coefficient; then exp(A) is unitary.
  bool is_anti_hermitian(double tol = 1e-10) const;

  /// Drops coefficients with magnitude <= tol.
  void prune(double tol);

  friend bool operator==(const GateExponent&, const GateExponent&) = default;

 private:
  void check(int mu) const;

  int n_ = 0;
  std::map<std::pair<int, int>, cplx> a_;
  std::map<int, cplx> b_;
  cplx s_ = 0.0;
};

/// Purely quadratic form over d_0..d_2n of a GateExponent:
/// a~_{mu nu} = a_{mu nu} for mu, nu >= 1 and a~_{sigma 0} = -a~_{0 sigma}
/// = -i b_sigma / 2. Stored as a dense block over the indices that carry a
/// non-zero coefficient.
struct ExtendedQuadratic {
  int dim = 1;                 // 2n + 1
  std::vector<int> support;    // sorted indices in 0..2n
  Eigen::MatrixXcd block;      // a~ restricted to support x support
  cplx s = 0.0;

  cplx at(int mu, int nu) const;
  Eigen::MatrixXcd dense() const;
};

ExtendedQuadratic extend_quadratic(const GateExponent& g);

/// Inverse of extend_quadratic: b_sigma = i (a~_{sigma 0} - a~_{0 sigma}).
GateExponent from_extended(const ExtendedQuadratic& e);

/// Expands A over Pauli strings using the family's c operators (the result
/// has family.width() lines).
PauliSum to_pauli_sum(const GateExponent& g, const JwFamily& family);

/// Expresses a two-line Pauli string in the standard ordering as
/// phase * (I | c_sigma | c_mu c_nu) over the operators of jw(2, .).
struct JwMonomial {
  int degree = 0;   // 0, 1 or 2
  int first = 0;    // c index (degree >= 1)
  int second = 0;   // c index (degree == 2), first < second
  cplx phase = 1.0;
};
JwMonomial two_line_monomial(const PauliString& standard);

/// Places two-line generator coefficients (reversed-factor convention, as
/// returned by log_to_L) on lines (k, k+1) of an n-line register. Linear
/// terms are only meaningful for k = 1; for k > 1 they must vanish up to
/// `linear_tol` relative to the largest coefficient.
GateExponent place_two_line(const GeneratorCoeffs11& tilde_coeffs, int k, int n,
                            double linear_tol = 1e-9);

/// Fermionic gate G(V, W) on nearest-neighbour lines (k, k+1).
GateExponent compile_gvw(const Mat2& v, const Mat2& w, int k, int n,
                         double tol = kMatchgateTol);

/// Diagonal matchgate diag(d1, d2, d3, d4) on lines k < l (labels ordered as
/// line k, line l).
GateExponent compile_diag(const std::array<cplx, 4>& d, int k, int l, int n,
                          double tol = kMatchgateTol);

/// Arbitrary invertible matchgate B on lines 1 and 2. B is given in the
/// labelling of the matchgate identities, which reads its first tensor
/// factor as line 2; the operator applied to (line 1, line 2) is
/// swap_factors(B).
GateExponent compile_mg12(const Mat4& b, int n, double tol = kLogTol);

/// Invertible one-line gate U on line 1.
GateExponent compile_u1(const Mat2& u, int n);

}  // namespace mgsim
