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

#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mgsim/exponents.hpp"
#include "mgsim/pauli.hpp"
#include "mgsim/sim.hpp"

namespace mgsim {

/// Basis of the Lie algebra spanned by the Jordan-Wigner operators of n
/// lines: c_1..c_2n, then i c_mu c_nu for mu < nu in lexicographic order,
/// then the identity. dim = n(2n+1) + 1.
class LieBasis {
 public:
  explicit LieBasis(int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(elements_.size()); }
  const PauliString& element(int i) const { return elements_.at(i); }

  int linear_index(int mu) const;
  int quadratic_index(int mu, int nu) const;
  int identity_index() const { return dim() - 1; }

  /// Generator indices of element i: (mu, 0) for c_mu, (mu, nu) for
  /// i c_mu c_nu, (0, 0) for the identity.
  std::pair<int, int> generators(int i) const;

  /// If p is proportional to a basis element, returns (index, factor) with
  /// p = factor * B_index.
  bool locate(const PauliString& p, int& index, cplx& factor) const;

 private:
  int n_;
  std::vector<PauliString> elements_;
  std::unordered_map<MaskKey, int, MaskKeyHash> index_;
};

/// One non-zero structure constant: [B_j, B_i] = value * B_k.
struct StructureEntry {
  int i;
  int k;
  cplx value;
};

/// Structure constants grouped by the left operand j.
struct StructureConstants {
  int dim = 0;
  std::vector<std::vector<StructureEntry>> by_left;

  /// c^k_{ji}, defined by [B_j, B_i] = sum_k c^k_{ji} B_k.
  cplx get(int j, int i, int k) const;
  std::size_t nonzeros() const;
};

/// Exhaustive pairwise computation from Pauli products. Quadratic in dim;
/// intended for small n and for cross-checking LieAlgebra::row.
StructureConstants structure_constants(const LieBasis& basis);

/// Basis plus structure constants computed row by row on demand. Safe to
/// share between threads.
class LieAlgebra {
 public:
  explicit LieAlgebra(int n);

  const LieBasis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }

  /// Non-zero [B_j, B_i] for all i.
  const std::vector<StructureEntry>& row(int j) const;

 private:
  std::vector<StructureEntry> compute_row(int j) const;

  LieBasis basis_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::vector<StructureEntry>>> rows_;
};

/// Process-wide cache keyed by n.
std::shared_ptr<const LieAlgebra> lie_algebra(int n);

/// Coordinates xi of a gate exponent: A = sum_j xi_j B_j.
Eigen::VectorXcd lie_coefficients(const GateExponent& g, const LieBasis& basis);

/// Sparse form of lie_coefficients.
std::vector<std::pair<int, cplx>> lie_coefficients_sparse(const GateExponent& g,
                                                          const LieBasis& basis);

/// Dense adjoint transfer E = exp(M), M_{ik} = sum_j xi_j c^k_{ji}, so that
/// exp(A) B_i exp(-A) = sum_k E_{ik} B_k.
Eigen::MatrixXcd adjoint_transfer(const Eigen::VectorXcd& xi, const LieAlgebra& algebra);

/// Coordinates of the observable in the Lie basis.
Eigen::VectorXcd lie_observable(const Observable& obs, const LieBasis& basis);

/// Coordinates of C^{-1} O C. Each gate exponentiates only the connected
/// blocks of its adjoint matrix.
Eigen::VectorXcd lie_heisenberg(std::span<const GateExponent> gates, const Observable& obs,
                                const LieAlgebra& algebra);

SimResult simulate_lie(std::span<const GateExponent> gates, const ProductState& state,
                       const Observable& obs, const SimOptions& options = {});

}  // namespace mgsim
