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

#include <vector>

#include "mgsim/pauli.hpp"

namespace mgsim {

/// How the extra anticommuting generator c_0 is realised.
///  - parity:     c_0 = Z...Z on the n circuit lines.
///  - extra_line: c_0 = Z...Z X with X on an added line n+1; every other
///                operator is extended by the identity there.
enum class C0Mode { parity, extra_line };

/// Jordan-Wigner operator c_mu on n lines, 1 <= mu <= 2n:
/// Z on lines 1..k-1, then X (mu = 2k-1) or Y (mu = 2k), identity after.
PauliString jw(int n, int mu);

/// Two-line operators with reversed tensor factors: IX, IY, XZ, YZ.
PauliString jw_tilde2(int mu);

/// The extra generator c_0; has n lines (parity) or n+1 lines (extra_line).
PauliString c0(int n, C0Mode mode);

/// Cached c_0..c_2n and d_0..d_2n with d_0 = c_0 and d_mu = i c_mu c_0.
/// Every operator is a Hermitian PauliString with coefficient 1.
class JwFamily {
 public:
  JwFamily(int n, C0Mode mode);

  /// Circuit lines.
  int n() const { return n_; }
  /// Lines of the stored strings: n, or n+1 in extra_line mode.
  int width() const { return mode_ == C0Mode::extra_line ? n_ + 1 : n_; }
  C0Mode mode() const { return mode_; }

  const PauliString& c(int mu) const;
  const PauliString& d(int mu) const;

 private:
  int n_;
  C0Mode mode_;
  std::vector<PauliString> c_;
  std::vector<PauliString> d_;
};

/// d_mu of the family (range-checked).
PauliString d_op(const JwFamily& family, int mu);

}  // namespace mgsim
