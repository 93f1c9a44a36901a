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

// Two-line (4x4) matchgate theory.
//
// Rows and columns of a Mat4 are labelled 1..4 for the two-qubit basis
// states 00, 01, 10, 11 (first tensor factor = most significant bit). All
// identities, predicates and generators here use the reversed-factor
// Jordan-Wigner operators IX, IY, XZ, YZ, for which the ten matchgate
// identities hold exactly as written. `swap_factors` converts to the
// standard ordering XI, YI, ZX, ZY (relabelling 1,2,3,4 -> 1,3,2,4).

#include <array>
#include <complex>
#include <span>

#include <Eigen/Dense>

#include "mgsim/pauli.hpp"

namespace mgsim {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec16 = Eigen::Matrix<cplx, 16, 1>;

inline constexpr double kMatchgateTol = 1e-10;
inline constexpr double kLogTol = 1e-8;

/// 1-based (row, column) label of a Mat4 entry.
struct EntryIndex {
  int row;
  int col;
  friend bool operator==(const EntryIndex&, const EntryIndex&) = default;
};

/// M_1..M_10 stored at positions 0..9.
using IdentityVector = std::array<cplx, 10>;

/// Coefficients over II; IX, IY, XZ, YZ; IZ, XY, YY, XX, YX, ZI.
using GeneratorCoeffs11 = std::array<cplx, 11>;

/// F_0..F_5 as vectors over C^4 (x) C^4, entry (a,b) at 4*(a-1)+(b-1).
using AntisymBasis = std::array<Vec16, 6>;

IdentityVector identities(const Mat4& b);

/// max_i |M_i| / ||B||_F^2 (0 for the zero matrix).
double identity_residual(const Mat4& b);

/// True iff max_i |M_i| <= tol * ||B||_F^2. The identities are homogeneous
/// of degree two, so the verdict does not change under B -> lambda*B.
bool is_matchgate(const Mat4& b, double tol = kMatchgateTol);

/// Zero-based indices of the five identities in which B_ij occurs.
std::array<int, 5> identities_containing(EntryIndex ij);

/// Checks only the five identities containing B_ij. Throws
/// PreconditionError when |B_ij| <= tol * ||B||_F.
bool reduced_check(const Mat4& b, EntryIndex ij, double tol = kMatchgateTol);

/// Matchgate with B_ij = c: the ten entries not multiplied by B_ij in any
/// identity are taken from `free_params` (row-major order of their labels)
/// and the five multipliers are solved from the identities containing B_ij.
Mat4 sample_matchgate(EntryIndex ij, cplx c, std::span<const cplx, 10> free_params);

/// Labels of the ten free entries used by sample_matchgate, row-major.
std::array<EntryIndex, 10> free_entries(EntryIndex ij);

/// G(V, W): V on the even-parity block (labels 1,4), W on the odd block
/// (labels 2,3). Throws GateClassError unless
/// |det V - det W| <= tol * (|det V| + |det W| + 1).
Mat4 g_vw(const Mat2& v, const Mat2& w, double tol = kMatchgateTol);

AntisymBasis antisym_basis();

/// D_i = <F_i|B(x)B|F_0> and D_i^T = <F_0|B(x)B|F_i>, i = 0..5.
struct DValues {
  std::array<cplx, 6> d;
  std::array<cplx, 6> dt;
};

DValues d_values(const Mat4& b);

/// True iff F_0 is an eigenvector of both B(x)B and B^T(x)B^T: the component
/// of (B(x)B)F_0 orthogonal to F_0 must have norm <= tol * ||B||_F^2 * ||F_0||,
/// and likewise for the transpose.
bool eigenvector_predicate(const Mat4& b, double tol = kMatchgateTol);

/// The two-line Pauli strings of the eleven generators, in basis order.
std::array<PauliString, 11> generator_paulis();

/// The eleven generators as explicit matrices.
std::array<Mat4, 11> generators11();

/// Sum_i coeffs[i] * A_i.
Mat4 combine(const GeneratorCoeffs11& coeffs);

/// Orthogonal projection onto span(generators11) under the trace inner
/// product. `residual` receives ||a - projection||_F when non-null.
GeneratorCoeffs11 project_to_L(const Mat4& a, double* residual = nullptr);

/// exp(Sum_i coeffs[i] * A_i).
Mat4 exp_L(const GeneratorCoeffs11& coeffs);

/// A logarithm of an invertible matchgate inside span(generators11).
///
/// The principal logarithm is tried first. When it falls outside the span
/// the eigenvalue logs are shifted by 2*pi*i*k, k in {-2..2}, smallest total
/// shift first. Ill-conditioned (near-defective) inputs use the Schur-based
/// principal logarithm without branch search. Throws PreconditionError for
/// |det B| <= tol * ||B||_F^4 and LogError when no candidate has relative
/// span residual <= tol.
GeneratorCoeffs11 log_to_L(const Mat4& b, double tol = kLogTol);

/// The 5x16 system <F_i|(A(x)I + I(x)A)|F_0> = 0, i = 1..5, over the Pauli
/// coordinates alpha_pq of A = Sum alpha_pq P_p (x) P_q (p, q in I, X, Y, Z,
/// coordinate 4p+q), its rank and a basis of its nullspace (columns).
struct AfiveSystem {
  Eigen::Matrix<cplx, 5, 16> system;
  int rank = 0;
  Eigen::Matrix<cplx, 16, Eigen::Dynamic> nullspace;
};

AfiveSystem nullspace_Afive();

/// Pauli coordinates (see AfiveSystem) of a 4x4 matrix.
Vec16 pauli_coordinates(const Mat4& a);

/// Dense 2-line Pauli product matrix P (x) Q.
Mat4 pauli_matrix(Pauli first, Pauli second);
/// Dense matrix of a 2-line PauliString, including its scalar.
Mat4 pauli_matrix(const PauliString& p);

/// Reverses the tensor factors: P B P with P the permutation 1,2,3,4 ->
/// 1,3,2,4.
Mat4 swap_factors(const Mat4& b);

}  // namespace mgsim
