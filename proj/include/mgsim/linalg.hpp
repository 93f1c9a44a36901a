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

#include <span>

#include <Eigen/Dense>

namespace mgsim::linalg {

/// exp(a) by scaling and squaring with a degree 3..13 Pade approximant
/// chosen from the 1-norm.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// Eigendecomposition a = vectors * diag(values) * inverse, together with
/// the 2-norm condition number of `vectors`.
struct EigenSplit {
  Eigen::MatrixXcd vectors;
  Eigen::MatrixXcd inverse;
  Eigen::VectorXcd values;
  double condition = 0.0;
};

EigenSplit eigen_split(const Eigen::MatrixXcd& a);

/// Principal branch log, with eigenvalues on the negative real axis (up to a
/// relative 1e-14 wobble) sent to +i*pi so equal eigenvalues get equal logs.
std::complex<double> principal_log(std::complex<double> z);

/// vectors * diag(log(values) + 2*pi*i*shifts) * inverse. `shifts` is empty
/// or has one entry per eigenvalue.
Eigen::MatrixXcd eigen_log(const EigenSplit& split, std::span<const int> shifts = {});

/// Eigenvector condition number above which logm switches to the Schur
/// based algorithm.
inline constexpr double kLogConditionLimit = 1e8;

/// Principal matrix logarithm: eigendecomposition when the eigenvector
/// matrix is well conditioned, Schur-Parlett otherwise.
Eigen::MatrixXcd logm(const Eigen::MatrixXcd& a);

/// Numerical rank from the singular values, relative threshold `rel_tol`.
int rank(const Eigen::MatrixXcd& a, double rel_tol = 1e-10);

}  // namespace mgsim::linalg
