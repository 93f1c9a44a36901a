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

#include "mgsim/matchgate4.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "mgsim/error.hpp"
#include "mgsim/linalg.hpp"

namespace mgsim {
namespace {

// One signed product B_{r1 c1} * B_{r2 c2}; labels are 1-based.
struct Term {
  int sign;
  EntryIndex first;
  EntryIndex second;
};

using Identity = std::array<Term, 4>;

constexpr std::array<Identity, 10> kIdentities = {{
    {{{+1, {1, 1}, {4, 4}}, {-1, {1, 4}, {4, 1}}, {-1, {2, 2}, {3, 3}}, {+1, {2, 3}, {3, 2}}}},
    {{{+1, {2, 1}, {4, 4}}, {-1, {2, 2}, {4, 3}}, {+1, {2, 3}, {4, 2}}, {-1, {2, 4}, {4, 1}}}},
    {{{+1, {3, 1}, {4, 4}}, {-1, {3, 2}, {4, 3}}, {+1, {3, 3}, {4, 2}}, {-1, {3, 4}, {4, 1}}}},
    {{{+1, {1, 3}, {4, 4}}, {-1, {1, 4}, {4, 3}}, {-1, {2, 3}, {3, 4}}, {+1, {2, 4}, {3, 3}}}},
    {{{+1, {1, 2}, {4, 4}}, {-1, {1, 4}, {4, 2}}, {-1, {2, 2}, {3, 4}}, {+1, {2, 4}, {3, 2}}}},
    {{{+1, {1, 1}, {2, 4}}, {-1, {1, 2}, {2, 3}}, {+1, {1, 3}, {2, 2}}, {-1, {1, 4}, {2, 1}}}},
    {{{+1, {1, 1}, {4, 2}}, {-1, {1, 2}, {4, 1}}, {-1, {2, 1}, {3, 2}}, {+1, {2, 2}, {3, 1}}}},
    {{{+1, {1, 2}, {4, 3}}, {-1, {1, 3}, {4, 2}}, {-1, {2, 1}, {3, 4}}, {+1, {2, 4}, {3, 1}}}},
    {{{+1, {1, 1}, {3, 4}}, {-1, {1, 2}, {3, 3}}, {+1, {1, 3}, {3, 2}}, {-1, {1, 4}, {3, 1}}}},
    {{{+1, {1, 1}, {4, 3}}, {-1, {1, 3}, {4, 1}}, {-1, {2, 1}, {3, 3}}, {+1, {2, 3}, {3, 1}}}},
}};

cplx at(const Mat4& b, EntryIndex e) { return b(e.row - 1, e.col - 1); }

cplx evaluate(const Identity& id, const Mat4& b) {
  cplx sum = 0;
  for (const Term& t : id) sum += double(t.sign) * at(b, t.first) * at(b, t.second);
  return sum;
}

void check_index(EntryIndex ij) {
  if (ij.row < 1 || ij.row > 4 || ij.col < 1 || ij.col > 4) {
    throw PreconditionError("entry label outside 1..4");
  }
}

// For identity `k` containing B_ij: the term index holding B_ij and the
// label of its partner factor.
std::pair<int, EntryIndex> partner(int k, EntryIndex ij) {
  const Identity& id = kIdentities[k];
  for (int t = 0; t < 4; ++t) {
    if (id[t].first == ij) return {t, id[t].second};
    if (id[t].second == ij) return {t, id[t].first};
  }
  throw std::logic_error("entry not present in identity");
}

Eigen::Matrix<cplx, 16, 16> kron(const Mat4& a, const Mat4& b) {
  Eigen::Matrix<cplx, 16, 16> k;
  for (int r1 = 0; r1 < 4; ++r1)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int r2 = 0; r2 < 4; ++r2)
        for (int c2 = 0; c2 < 4; ++c2) k(4 * r1 + r2, 4 * c1 + c2) = a(r1, c1) * b(r2, c2);
  return k;
}

Mat2 single_pauli(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

constexpr std::array<Pauli, 4> kPauliOrder = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

double frob2(const Mat4& b) { return b.squaredNorm(); }

}  // namespace

IdentityVector identities(const Mat4& b) {
  IdentityVector out;
  for (int k = 0; k < 10; ++k) out[k] = evaluate(kIdentities[k], b);
  return out;
}

double identity_residual(const Mat4& b) {
  const double scale = frob2(b);
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const cplx& m : identities(b)) worst = std::max(worst, std::abs(m));
  return worst / scale;
}

bool is_matchgate(const Mat4& b, double tol) { return identity_residual(b) <= tol; }

std::array<int, 5> identities_containing(EntryIndex ij) {
  check_index(ij);
  std::array<int, 5> out{};
  int found = 0;
  for (int k = 0; k < 10; ++k) {
    for (const Term& t : kIdentities[k]) {
      if (t.first == ij || t.second == ij) {
        if (found == 5) throw std::logic_error("entry occurs in more than five identities");
        out[found++] = k;
        break;
      }
    }
  }
  if (found != 5) throw std::logic_error("entry occurs in fewer than five identities");
  return out;
}

bool reduced_check(const Mat4& b, EntryIndex ij, double tol) {
  check_index(ij);
  if (std::abs(at(b, ij)) <= tol * b.norm()) {
    throw PreconditionError("reduced_check: B_" + std::to_string(ij.row) +
                            std::to_string(ij.col) + " is (numerically) zero");
  }
  const double scale = frob2(b);
  for (int k : identities_containing(ij)) {
    if (std::abs(evaluate(kIdentities[k], b)) > tol * scale) return false;
  }
  return true;
}

std::array<EntryIndex, 10> free_entries(EntryIndex ij) {
  check_index(ij);
  std::array<bool, 16> taken{};
  taken[4 * (ij.row - 1) + ij.col - 1] = true;
  for (int k : identities_containing(ij)) {
    const EntryIndex m = partner(k, ij).second;
    taken[4 * (m.row - 1) + m.col - 1] = true;
  }
  std::array<EntryIndex, 10> out{};
  int count = 0;
  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) {
      if (taken[4 * (r - 1) + c - 1]) continue;
      if (count == 10) throw std::logic_error("multipliers of an entry are not distinct");
      out[count++] = {r, c};
    }
  }
  if (count != 10) throw std::logic_error("multipliers of an entry are not distinct");
  return out;
}

Mat4 sample_matchgate(EntryIndex ij, cplx c, std::span<const cplx, 10> free_params) {
  if (c == 0.0) throw PreconditionError("sample_matchgate: pivot entry must be non-zero");
  const auto free = free_entries(ij);
  Mat4 b = Mat4::Zero();
  b(ij.row - 1, ij.col - 1) = c;
  for (int k = 0; k < 10; ++k) b(free[k].row - 1, free[k].col - 1) = free_params[k];

  auto is_free = [&free](EntryIndex e) {
    return std::find(free.begin(), free.end(), e) != free.end();
  };
  for (int k : identities_containing(ij)) {
    const auto [t_pivot, mult] = partner(k, ij);
    cplx rest = 0;
    for (int t = 0; t < 4; ++t) {
      if (t == t_pivot) continue;
      const Term& term = kIdentities[k][t];
      if (!is_free(term.first) || !is_free(term.second)) {
        throw std::logic_error("identity couples two solved entries");
      }
      rest += double(term.sign) * at(b, term.first) * at(b, term.second);
    }
    const double sign = kIdentities[k][t_pivot].sign;
    b(mult.row - 1, mult.col - 1) = -rest / (sign * c);
  }
  return b;
}

Mat4 g_vw(const Mat2& v, const Mat2& w, double tol) {
  const cplx dv = v.determinant();
  const cplx dw = w.determinant();
  if (std::abs(dv - dw) > tol * (std::abs(dv) + std::abs(dw) + 1.0)) {
    throw GateClassError("det V = det W",
                         "|det V - det W| = " + std::to_string(std::abs(dv - dw)));
  }
  Mat4 b = Mat4::Zero();
  b(0, 0) = v(0, 0);
  b(0, 3) = v(0, 1);
  b(3, 0) = v(1, 0);
  b(3, 3) = v(1, 1);
  b(1, 1) = w(0, 0);
  b(1, 2) = w(0, 1);
  b(2, 1) = w(1, 0);
  b(2, 2) = w(1, 1);
  return b;
}

AntisymBasis antisym_basis() {
  auto idx = [](int a, int b) { return 4 * (a - 1) + (b - 1); };
  AntisymBasis f;
  for (auto& v : f) v.setZero();
  f[0](idx(1, 4)) = 1;
  f[0](idx(4, 1)) = -1;
  f[0](idx(2, 3)) = -1;
  f[0](idx(3, 2)) = 1;
  f[1](idx(1, 4)) = 1;
  f[1](idx(4, 1)) = -1;
  f[1](idx(2, 3)) = 1;
  f[1](idx(3, 2)) = -1;
  f[2](idx(1, 2)) = 1;
  f[2](idx(2, 1)) = -1;
  f[3](idx(1, 3)) = 1;
  f[3](idx(3, 1)) = -1;
  f[4](idx(2, 4)) = 1;
  f[4](idx(4, 2)) = -1;
  f[5](idx(3, 4)) = 1;
  f[5](idx(4, 3)) = -1;
  return f;
}

DValues d_values(const Mat4& b) {
  const AntisymBasis f = antisym_basis();
  const auto bb = kron(b, b);
  const Vec16 image = bb * f[0];
  const Vec16 image_t = bb.transpose() * f[0];
  DValues out;
  for (int i = 0; i < 6; ++i) {
    out.d[i] = f[i].dot(image);     // F real: dot() conjugation is harmless
    out.dt[i] = f[i].dot(image_t);  // <F_i|B^T(x)B^T|F_0> = <F_0|B(x)B|F_i>
  }
  return out;
}

bool eigenvector_predicate(const Mat4& b, double tol) {
  const Vec16 f0 = antisym_basis()[0];
  const auto bb = kron(b, b);
  const double bound = tol * frob2(b) * f0.norm();
  for (const Vec16& image : {Vec16(bb * f0), Vec16(bb.transpose() * f0)}) {
    const cplx along = f0.dot(image) / f0.squaredNorm();
    if ((image - along * f0).norm() > bound) return false;
  }
  return true;
}

std::array<PauliString, 11> generator_paulis() {
  static const std::array<const char*, 11> kNames = {
      "II", "IX", "IY", "XZ", "YZ", "IZ", "XY", "YY", "XX", "YX", "ZI"};
  std::array<PauliString, 11> out;
  for (int i = 0; i < 11; ++i) out[i] = PauliString::from_string(kNames[i]);
  return out;
}

std::array<Mat4, 11> generators11() {
  std::array<Mat4, 11> out;
  const auto paulis = generator_paulis();
  for (int i = 0; i < 11; ++i) out[i] = pauli_matrix(paulis[i]);
  return out;
}

Mat4 combine(const GeneratorCoeffs11& coeffs) {
  const auto gens = generators11();
  Mat4 a = Mat4::Zero();
  for (int i = 0; i < 11; ++i) a += coeffs[i] * gens[i];
  return a;
}

GeneratorCoeffs11 project_to_L(const Mat4& a, double* residual) {
  const auto gens = generators11();
  GeneratorCoeffs11 coeffs;
  // Pauli products are orthonormal under tr(P^dagger Q) / 4.
  for (int i = 0; i < 11; ++i) coeffs[i] = (gens[i].adjoint() * a).trace() / 4.0;
  if (residual) *residual = (a - combine(coeffs)).norm();
  return coeffs;
}

Mat4 exp_L(const GeneratorCoeffs11& coeffs) {
  return linalg::expm(Eigen::MatrixXcd(combine(coeffs)));
}

GeneratorCoeffs11 log_to_L(const Mat4& b, double tol) {
  const double scale = b.norm();
  if (scale == 0.0 || std::abs(b.determinant()) <= tol * std::pow(scale, 4)) {
    throw PreconditionError("log_to_L: matrix is not invertible");
  }
  double best = std::numeric_limits<double>::infinity();
  auto accept = [&](const Mat4& log, GeneratorCoeffs11& out) {
    double residual = 0;
    out = project_to_L(log, &residual);
    const double rel = residual / std::max(log.norm(), 1e-300);
    best = std::min(best, rel);
    return residual <= tol * log.norm();
  };

  GeneratorCoeffs11 coeffs;
  const auto split = linalg::eigen_split(Eigen::MatrixXcd(b));
  if (split.condition < linalg::kLogConditionLimit) {
    // Candidate branch shifts ordered by total |k|; the zero shift is the
    // principal logarithm.
    std::vector<std::array<int, 4>> shifts;
    for (int a = -2; a <= 2; ++a)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d)
          for (int e = -2; e <= 2; ++e) shifts.push_back({a, c, d, e});
    std::stable_sort(shifts.begin(), shifts.end(), [](const auto& x, const auto& y) {
      auto cost = [](const auto& s) {
        return std::abs(s[0]) + std::abs(s[1]) + std::abs(s[2]) + std::abs(s[3]);
      };
      return cost(x) < cost(y);
    });
    for (const auto& s : shifts) {
      if (accept(Mat4(linalg::eigen_log(split, s)), coeffs)) return coeffs;
    }
  } else {
    if (accept(Mat4(Eigen::MatrixXcd(b).log()), coeffs)) return coeffs;
  }
  throw LogError("log_to_L: no logarithm inside the 11-generator span (relative residual " +
                     std::to_string(best) + ")",
                 best);
}

Vec16 pauli_coordinates(const Mat4& a) {
  Vec16 out;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      out(4 * p + q) = (pauli_matrix(kPauliOrder[p], kPauliOrder[q]).adjoint() * a).trace() / 4.0;
    }
  }
  return out;
}

AfiveSystem nullspace_Afive() {
  const AntisymBasis f = antisym_basis();
  const Mat4 id = Mat4::Identity();
  AfiveSystem out;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      const Mat4 a = pauli_matrix(kPauliOrder[p], kPauliOrder[q]);
      const Vec16 image = (kron(a, id) + kron(id, a)) * f[0];
      for (int i = 1; i <= 5; ++i) out.system(i - 1, 4 * p + q) = f[i].dot(image);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(out.system),
                                         Eigen::ComputeFullV);
  out.rank = linalg::rank(out.system);
  out.nullspace = svd.matrixV().rightCols(16 - out.rank);
  return out;
}

Mat4 pauli_matrix(Pauli first, Pauli second) {
  const Mat2 a = single_pauli(first);
  const Mat2 b = single_pauli(second);
  Mat4 m;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2) m(2 * r1 + r2, 2 * c1 + c2) = a(r1, c1) * b(r2, c2);
  return m;
}

Mat4 pauli_matrix(const PauliString& p) {
  if (p.n() != 2) throw DimensionError("pauli_matrix: expected a two-line string");
  return p.scalar() * pauli_matrix(p.get(1), p.get(2));
}

Mat4 swap_factors(const Mat4& b) {
  static const std::array<int, 4> perm = {0, 2, 1, 3};
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = b(perm[r], perm[c]);
  return out;
}

}  // namespace mgsim
