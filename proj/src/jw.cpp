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

#include "mgsim/jw.hpp"

#include <string>

#include "mgsim/error.hpp"

namespace mgsim {
namespace {

void check_mu(int n, int mu, int lo) {
  if (mu < lo || mu > 2 * n) {
    throw PreconditionError("Jordan-Wigner index " + std::to_string(mu) + " outside " +
                            std::to_string(lo) + ".." + std::to_string(2 * n));
  }
}

PauliString widen(const PauliString& p, int width) {
  if (p.n() == width) return p;
  PauliString out(width);
  for (int line = 1; line <= p.n(); ++line) out.set(line, p.get(line));
  out.mul_i(p.phase_pow());
  return out;
}

}  // namespace

PauliString jw(int n, int mu) {
  check_mu(n, mu, 1);
  const int k = (mu + 1) / 2;
  PauliString p(n);
  for (int line = 1; line < k; ++line) p.set(line, Pauli::Z);
  p.set(k, mu % 2 == 1 ? Pauli::X : Pauli::Y);
  return p;
}

PauliString jw_tilde2(int mu) {
  check_mu(2, mu, 1);
  const PauliString standard = jw(2, mu);
  PauliString reversed(2);
  reversed.set(1, standard.get(2));
  reversed.set(2, standard.get(1));
  return reversed;
}

PauliString c0(int n, C0Mode mode) {
  if (n < 1) throw PreconditionError("c0: need at least one line");
  if (mode == C0Mode::parity) {
    PauliString p(n);
    for (int line = 1; line <= n; ++line) p.set(line, Pauli::Z);
    return p;
  }
  return jw(n + 1, 2 * n + 1);
}

JwFamily::JwFamily(int n, C0Mode mode) : n_(n), mode_(mode) {
  if (n < 1) throw PreconditionError("JwFamily: need at least one line");
  const int w = width();
  c_.reserve(2 * n + 1);
  d_.reserve(2 * n + 1);
  c_.push_back(c0(n, mode));
  for (int mu = 1; mu <= 2 * n; ++mu) c_.push_back(widen(jw(n, mu), w));
  d_.push_back(c_[0]);
  for (int mu = 1; mu <= 2 * n; ++mu) d_.push_back(pauli_mul(c_[mu], c_[0]).mul_i(1));
}

const PauliString& JwFamily::c(int mu) const {
  check_mu(n_, mu, 0);
  return c_[mu];
}

const PauliString& JwFamily::d(int mu) const {
  check_mu(n_, mu, 0);
  return d_[mu];
}

PauliString d_op(const JwFamily& family, int mu) { return family.d(mu); }

}  // namespace mgsim
