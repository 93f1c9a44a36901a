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

#include "mgsim/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "mgsim/error.hpp"
#include "mgsim/linalg.hpp"

namespace mgsim {
namespace {

constexpr cplx kI(0.0, 1.0);

int line_of(int mu) { return (mu + 1) / 2; }

}  // namespace

GateExponent::GateExponent(int n) : n_(n) {
  if (n < 1) throw PreconditionError("GateExponent: need at least one line");
}

void GateExponent::check(int mu) const {
  if (mu < 1 || mu > 2 * n_) {
    throw PreconditionError("generator index " + std::to_string(mu) + " outside 1.." +
                            std::to_string(2 * n_));
  }
}

cplx GateExponent::a(int mu, int nu) const {
  check(mu);
  check(nu);
  if (mu == nu) return 0.0;
  const bool flip = mu > nu;
  auto it = a_.find(flip ? std::pair{nu, mu} : std::pair{mu, nu});
  if (it == a_.end()) return 0.0;
  return flip ? -it->second : it->second;
}

void GateExponent::set_a(int mu, int nu, cplx value) {
  check(mu);
  check(nu);
  if (mu == nu) throw PreconditionError("a is antisymmetric: diagonal entries are zero");
  if (mu < nu) {
    a_[{mu, nu}] = value;
  } else {
    a_[{nu, mu}] = -value;
  }
}

void GateExponent::add_a(int mu, int nu, cplx value) { set_a(mu, nu, a(mu, nu) + value); }

cplx GateExponent::b(int sigma) const {
  check(sigma);
  auto it = b_.find(sigma);
  return it == b_.end() ? cplx(0.0) : it->second;
}

void GateExponent::set_b(int sigma, cplx value) {
  check(sigma);
  b_[sigma] = value;
}

void GateExponent::add_b(int sigma, cplx value) { set_b(sigma, b(sigma) + value); }

std::vector<int> GateExponent::generator_support() const {
  std::set<int> idx;
  for (const auto& [key, value] : a_) {
    idx.insert(key.first);
    idx.insert(key.second);
  }
  for (const auto& [key, value] : b_) idx.insert(key);
  return {idx.begin(), idx.end()};
}

std::vector<int> GateExponent::line_support() const {
  std::set<int> lines;
  for (const auto& [key, value] : a_) {
    for (int l = line_of(key.first); l <= line_of(key.second); ++l) lines.insert(l);
  }
  for (const auto& [key, value] : b_) {
    for (int l = 1; l <= line_of(key); ++l) lines.insert(l);
  }
  return {lines.begin(), lines.end()};
}

bool GateExponent::is_anti_hermitian(double tol) const {
  double scale = std::abs(s_);
  for (const auto& [k, v] : a_) scale = std::max(scale, std::abs(v));
  for (const auto& [k, v] : b_) scale = std::max(scale, std::abs(v));
  const double bound = tol * std::max(scale, 1.0);
  for (const auto& [k, v] : a_) {
    if (std::abs(v.imag()) > bound) return false;
  }
  for (const auto& [k, v] : b_) {
    if (std::abs(v.real()) > bound) return false;
  }
  return std::abs(s_.real()) <= bound;
}

void GateExponent::prune(double tol) {
  std::erase_if(a_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
  std::erase_if(b_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

cplx ExtendedQuadratic::at(int mu, int nu) const {
  auto pos = [this](int i) {
    auto it = std::lower_bound(support.begin(), support.end(), i);
    return (it != support.end() && *it == i) ? static_cast<int>(it - support.begin()) : -1;
  };
  const int r = pos(mu);
  const int c = pos(nu);
  return (r < 0 || c < 0) ? cplx(0.0) : block(r, c);
}

Eigen::MatrixXcd ExtendedQuadratic::dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t r = 0; r < support.size(); ++r)
    for (std::size_t c = 0; c < support.size(); ++c) out(support[r], support[c]) = block(r, c);
  return out;
}

ExtendedQuadratic extend_quadratic(const GateExponent& g) {
  ExtendedQuadratic e;
  e.dim = 2 * g.n() + 1;
  e.s = g.s();
  std::set<int> idx;
  for (const auto& [key, value] : g.quadratic()) {
    idx.insert(key.first);
    idx.insert(key.second);
  }
  for (const auto& [key, value] : g.linear()) {
    idx.insert(key);
    idx.insert(0);
  }
  e.support.assign(idx.begin(), idx.end());
  const auto m = static_cast<Eigen::Index>(e.support.size());
  e.block = Eigen::MatrixXcd::Zero(m, m);
  auto pos = [&e](int i) {
    return static_cast<Eigen::Index>(
        std::lower_bound(e.support.begin(), e.support.end(), i) - e.support.begin());
  };
  for (const auto& [key, value] : g.quadratic()) {
    e.block(pos(key.first), pos(key.second)) = value;
    e.block(pos(key.second), pos(key.first)) = -value;
  }
  for (const auto& [sigma, value] : g.linear()) {
    e.block(pos(sigma), 0) = -kI * value / 2.0;
    e.block(0, pos(sigma)) = kI * value / 2.0;
  }
  return e;
}

GateExponent from_extended(const ExtendedQuadratic& e) {
  const int n = (e.dim - 1) / 2;
  GateExponent g(n);
  g.set_s(e.s);
  for (std::size_t r = 0; r < e.support.size(); ++r) {
    for (std::size_t c = r + 1; c < e.support.size(); ++c) {
      const int mu = e.support[r];
      const int nu = e.support[c];
      const cplx upper = e.block(r, c);
      const cplx lower = e.block(c, r);
      if (upper == 0.0 && lower == 0.0) continue;
      if (mu == 0) {
        g.set_b(nu, kI * (lower - upper));
      } else {
        g.set_a(mu, nu, (upper - lower) / 2.0);
      }
    }
  }
  return g;
}

PauliSum to_pauli_sum(const GateExponent& g, const JwFamily& family) {
  if (family.n() != g.n()) throw DimensionError("to_pauli_sum: family line count differs");
  PauliSum sum(family.width());
  if (g.s() != 0.0) sum.add(PauliString(family.width()), g.s());
  for (const auto& [key, value] : g.quadratic()) {
    sum.add(pauli_mul(family.c(key.first), family.c(key.second)), 2.0 * value);
  }
  for (const auto& [sigma, value] : g.linear()) sum.add(family.c(sigma), value);
  return sum;
}

JwMonomial two_line_monomial(const PauliString& standard) {
  if (standard.n() != 2) throw DimensionError("two_line_monomial: expected two lines");
  const PauliString target = standard;
  auto match = [&target](const PauliString& candidate, JwMonomial m) -> std::optional<JwMonomial> {
    if (!candidate.same_masks(target)) return std::nullopt;
    // target = phase * candidate
    m.phase = target.scalar() / candidate.scalar();
    return m;
  };
  if (auto m = match(PauliString(2), {0, 0, 0, 1.0})) return *m;
  for (int mu = 1; mu <= 4; ++mu) {
    if (auto m = match(jw(2, mu), {1, mu, 0, 1.0})) return *m;
  }
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = mu + 1; nu <= 4; ++nu) {
      if (auto m = match(pauli_mul(jw(2, mu), jw(2, nu)), {2, mu, nu, 1.0})) return *m;
    }
  }
  throw PreconditionError("two_line_monomial: " + standard.str() +
                          " is not linear or quadratic in the Jordan-Wigner operators");
}

GateExponent place_two_line(const GeneratorCoeffs11& tilde_coeffs, int k, int n,
                            double linear_tol) {
  if (k < 1 || k + 1 > n) {
    throw PreconditionError("two-line gate on lines (" + std::to_string(k) + "," +
                            std::to_string(k + 1) + ") does not fit " + std::to_string(n) +
                            " lines");
  }
  const auto paulis = generator_paulis();
  double scale = 0.0;
  for (const cplx& c : tilde_coeffs) scale = std::max(scale, std::abs(c));
  const int offset = 2 * (k - 1);
  GateExponent g(n);
  for (int i = 0; i < 11; ++i) {
    const cplx alpha = tilde_coeffs[i];
    if (alpha == 0.0) continue;
    PauliString standard(2);
    standard.set(1, paulis[i].get(2));
    standard.set(2, paulis[i].get(1));
    const JwMonomial m = two_line_monomial(standard);
    switch (m.degree) {
      case 0:
        g.set_s(g.s() + alpha * m.phase);
        break;
      case 1:
        if (k == 1) {
          g.add_b(m.first, alpha * m.phase);
        } else if (std::abs(alpha) > linear_tol * std::max(scale, 1.0)) {
          throw ConsistencyError("linear Jordan-Wigner term on lines (" + std::to_string(k) +
                                 "," + std::to_string(k + 1) + ")");
        }
        break;
      default:
        g.add_a(offset + m.first, offset + m.second, alpha * m.phase / 2.0);
        break;
    }
  }
  return g;
}

GateExponent compile_gvw(const Mat2& v, const Mat2& w, int k, int n, double tol) {
  const Mat4 b = g_vw(v, w, tol);
  // log_to_L works in the reversed-factor convention; reading its
  // coefficients in the standard one yields b itself.
  const GeneratorCoeffs11 coeffs = log_to_L(swap_factors(b), kLogTol);
  GateExponent g = place_two_line(coeffs, k, n);
  g.prune(1e-15);
  return g;
}

GateExponent compile_diag(const std::array<cplx, 4>& d, int k, int l, int n, double tol) {
  if (k < 1 || l > n || k >= l) {
    throw PreconditionError("diagonal gate needs lines k < l within 1.." + std::to_string(n));
  }
  for (const cplx& x : d) {
    if (x == 0.0) throw PreconditionError("diagonal gate has a zero entry");
  }
  const cplx lhs = d[0] * d[3];
  const cplx rhs = d[1] * d[2];
  if (std::abs(lhs - rhs) > tol * (std::abs(lhs) + std::abs(rhs))) {
    throw GateClassError("B11 B44 = B22 B33",
                         "diagonal matchgate condition fails by " +
                             std::to_string(std::abs(lhs - rhs)));
  }
  // d1 = e^{al+be+ga}, d2 = e^{al-be+ga}, d3 = e^{-al+be+ga}; d4 follows.
  const cplx l1 = std::log(d[0]);
  const cplx l2 = std::log(d[1]);
  const cplx l3 = std::log(d[2]);
  const cplx alpha = (l1 - l3) / 2.0;
  const cplx beta = (l1 - l2) / 2.0;
  const cplx gamma = (l2 + l3) / 2.0;
  GateExponent g(n);
  // alpha Z_k = alpha (-i c_{2k-1} c_{2k}) = 2 a c c  =>  a = -i alpha / 2.
  if (alpha != 0.0) g.set_a(2 * k - 1, 2 * k, -kI * alpha / 2.0);
  if (beta != 0.0) g.set_a(2 * l - 1, 2 * l, -kI * beta / 2.0);
  g.set_s(gamma);
  return g;
}

GateExponent compile_mg12(const Mat4& b, int n, double tol) {
  if (n < 2) throw PreconditionError("mg12 needs at least two lines");
  GateExponent g = place_two_line(log_to_L(b, tol), 1, n);
  g.prune(1e-15);
  return g;
}

GateExponent compile_u1(const Mat2& u, int n) {
  if (std::abs(u.determinant()) <= 1e-14 * u.squaredNorm()) {
    throw PreconditionError("u1: singular matrix");
  }
  const Mat2 log = linalg::logm(Eigen::MatrixXcd(u));
  Mat2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  const cplx cx = (x * log).trace() / 2.0;
  const cplx cy = (y * log).trace() / 2.0;
  const cplx cz = (z * log).trace() / 2.0;
  const cplx c1 = log.trace() / 2.0;
  GateExponent g(n);
  // X_1 = c_1, Y_1 = c_2, Z_1 = -i c_1 c_2.
  if (cx != 0.0) g.set_b(1, cx);
  if (cy != 0.0) g.set_b(2, cy);
  if (cz != 0.0) g.set_a(1, 2, -kI * cz / 2.0);
  g.set_s(c1);
  g.prune(1e-15);
  return g;
}

}  // namespace mgsim
