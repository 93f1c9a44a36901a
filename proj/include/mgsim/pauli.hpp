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
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mgsim {

using cplx = std::complex<double>;

/// Single-line Pauli. Bit 0 is the X component, bit 1 the Z component; Y is
/// stored natively as both bits set (not as i*X*Z).
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// i^k for k taken mod 4.
cplx i_pow(int k);

/// An n-line Pauli product  coeff * i^phase_pow * P_1 (x) ... (x) P_n.
///
/// The i-power is tracked as an exact integer so that Clifford-algebra
/// identities among Jordan-Wigner operators hold with zero tolerance. The
/// complex `coeff` stays 1 for every string built from the algebra alone.
/// Lines are 1-based in the public interface.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n lines.
  explicit PauliString(int n);

  /// Parses strings such as "XIZ", "+iXY", "-Y", "-iZZ". '_' is accepted
  /// for I.
  static PauliString from_string(std::string_view text);
  /// P on `line` (1-based), identity elsewhere.
  static PauliString single(int n, int line, Pauli p);

  int n() const { return n_; }
  Pauli get(int line) const;
  void set(int line, Pauli p);

  int phase_pow() const { return phase_; }
  cplx coeff() const { return coeff_; }
  /// coeff * i^phase_pow.
  cplx scalar() const;

  /// Multiplies by i^k exactly.
  PauliString& mul_i(int k);
  /// Multiplies the complex coefficient.
  PauliString& scale(cplx factor);
  /// Same operator masks with phase 0 and coeff 1.
  PauliString unit() const;

  bool is_identity() const;
  bool same_masks(const PauliString& other) const;
  /// Number of non-identity lines.
  int weight() const;
  /// True when the represented operator is Hermitian (scalar real).
  bool is_hermitian() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  /// "+XYZ", "-iIZ", ... followed by "*(re,im)" when coeff != 1.
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  friend PauliString pauli_mul(const PauliString&, const PauliString&);

  int n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  int phase_ = 0;
  cplx coeff_ = 1.0;
};

/// Exact product p*q. Throws DimensionError when line counts differ.
PauliString pauli_mul(const PauliString& p, const PauliString& q);

enum class Commutation { commute, anticommute };

/// Decided from the symplectic mask overlap; phases and coefficients are
/// irrelevant.
Commutation commutation_sign(const PauliString& p, const PauliString& q);

/// Places the lines of `p` at `target_lines` (1-based) of an n-line string.
PauliString embed(const PauliString& p, std::span<const int> target_lines,
                  int n);

/// Hashable (x, z) mask pair used as the PauliSum key.
struct MaskKey {
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> z;
  friend bool operator==(const MaskKey&, const MaskKey&) = default;
};

struct MaskKeyHash {
  std::size_t operator()(const MaskKey& k) const noexcept;
};

/// Linear combination of phase-free Pauli strings. Coefficients with
/// magnitude below `drop_tol` are never stored.
class PauliSum {
 public:
  static constexpr double kDefaultDropTol = 1e-14;

  explicit PauliSum(int n, double drop_tol = kDefaultDropTol);

  int n() const { return n_; }
  double drop_tol() const { return drop_tol_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds factor * p, folding the phase and coefficient of p into the sum.
  void add(const PauliString& p, cplx factor = 1.0);
  void add(const PauliSum& other, cplx factor = 1.0);
  PauliSum& operator*=(cplx factor);

  /// Coefficient of the unit string with the masks of p (phase ignored).
  cplx coeff(const PauliString& p) const;

  /// Terms as (unit string, coefficient) pairs in unspecified order.
  std::vector<std::pair<PauliString, cplx>> terms() const;

  const std::unordered_map<MaskKey, cplx, MaskKeyHash>& raw() const {
    return terms_;
  }

  /// Largest coefficient magnitude of (this - other).
  double max_abs_diff(const PauliSum& other) const;

 private:
  void accumulate(MaskKey key, cplx value);

  int n_;
  double drop_tol_;
  std::unordered_map<MaskKey, cplx, MaskKeyHash> terms_;
};

/// Tensor product of single-line states.
class ProductState {
 public:
  using Qubit = std::array<cplx, 2>;
  static constexpr double kNormTol = 1e-12;

  ProductState() = default;
  /// Throws PreconditionError for a line whose norm differs from 1 by more
  /// than kNormTol, unless `renormalize` is set (zero vectors always throw).
  explicit ProductState(std::vector<Qubit> qubits, bool renormalize = false);

  static ProductState zeros(int n);
  /// One character or token per line: 0, 1, +, -, i, -i.
  static Qubit named(std::string_view token);

  int n() const { return static_cast<int>(qubits_.size()); }
  const Qubit& qubit(int line) const { return qubits_.at(line - 1); }
  const std::vector<Qubit>& qubits() const { return qubits_; }

  /// Appends |0> as line n+1.
  ProductState with_zero_line() const;

  friend bool operator==(const ProductState&, const ProductState&) = default;

 private:
  std::vector<Qubit> qubits_;
};

/// <state| p |state>; O(weight of p).
cplx expectation(const ProductState& state, const PauliString& p);
/// Sum over terms; O(n * #terms).
cplx expectation(const ProductState& state, const PauliSum& s);

}  // namespace mgsim
