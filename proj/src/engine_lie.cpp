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

#include "mgsim/engine_lie.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "mgsim/error.hpp"
#include "mgsim/jw.hpp"
#include "mgsim/linalg.hpp"

namespace mgsim {

LieBasis::LieBasis(int n) : n_(n) {
  if (n < 1) throw PreconditionError("Lie basis needs at least one line");
  const int m = 2 * n;
  elements_.reserve(static_cast<std::size_t>(n) * (2 * n + 1) + 1);
  std::vector<PauliString> c;
  c.reserve(m);
  for (int mu = 1; mu <= m; ++mu) c.push_back(jw(n, mu));
  for (const PauliString& p : c) elements_.push_back(p);
  for (int mu = 1; mu <= m; ++mu) {
    for (int nu = mu + 1; nu <= m; ++nu) {
      elements_.push_back(pauli_mul(c[mu - 1], c[nu - 1]).mul_i(1));
    }
  }
  elements_.emplace_back(n);
  index_.reserve(elements_.size());
  for (int i = 0; i < dim(); ++i) {
    index_.emplace(MaskKey{elements_[i].x_words(), elements_[i].z_words()}, i);
  }
}

int LieBasis::linear_index(int mu) const {
  if (mu < 1 || mu > 2 * n_) throw PreconditionError("generator index out of range");
  return mu - 1;
}

int LieBasis::quadratic_index(int mu, int nu) const {
  const int m = 2 * n_;
  if (mu > nu) std::swap(mu, nu);
  if (mu < 1 || nu > m || mu == nu) throw PreconditionError("invalid generator pair");
  return m + (mu - 1) * m - (mu - 1) * mu / 2 + (nu - mu - 1);
}

std::pair<int, int> LieBasis::generators(int i) const {
  const int m = 2 * n_;
  if (i < 0 || i >= dim()) throw PreconditionError("basis index out of range");
  if (i < m) return {i + 1, 0};
  if (i == identity_index()) return {0, 0};
  int r = i - m;
  for (int mu = 1; mu < m; ++mu) {
    if (r < m - mu) return {mu, mu + 1 + r};
    r -= m - mu;
  }
  throw std::logic_error("unreachable basis index");
}

bool LieBasis::locate(const PauliString& p, int& index, cplx& factor) const {
  auto it = index_.find(MaskKey{p.x_words(), p.z_words()});
  if (it == index_.end()) return false;
  index = it->second;
  factor = p.scalar() / elements_[index].scalar();
  return true;
}

cplx StructureConstants::get(int j, int i, int k) const {
  for (const StructureEntry& e : by_left.at(j)) {
    if (e.i == i && e.k == k) return e.value;
  }
  return 0.0;
}

std::size_t StructureConstants::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : by_left) total += r.size();
  return total;
}

namespace {

// [B_j, B_i] as an entry, or nothing when they commute.
bool commutator_entry(const LieBasis& basis, int j, int i, StructureEntry& out) {
  const PauliString& bj = basis.element(j);
  const PauliString& bi = basis.element(i);
  if (commutation_sign(bj, bi) == Commutation::commute) return false;
  PauliString prod = pauli_mul(bj, bi);
  prod.scale(2.0);
  int k = 0;
  cplx factor = 0.0;
  if (!basis.locate(prod, k, factor)) {
    throw ConsistencyError("commutator of basis elements " + std::to_string(j) + " and " +
                           std::to_string(i) + " leaves the algebra");
  }
  out = {i, k, factor};
  return true;
}

}  // namespace

StructureConstants structure_constants(const LieBasis& basis) {
  StructureConstants sc;
  sc.dim = basis.dim();
  sc.by_left.resize(sc.dim);
  for (int j = 0; j < sc.dim; ++j) {
    for (int i = 0; i < sc.dim; ++i) {
      StructureEntry e{};
      if (commutator_entry(basis, j, i, e)) sc.by_left[j].push_back(e);
    }
  }
  return sc;
}

LieAlgebra::LieAlgebra(int n) : basis_(n), rows_(basis_.dim()) {}

const std::vector<StructureEntry>& LieAlgebra::row(int j) const {
  if (j < 0 || j >= dim()) throw PreconditionError("basis index out of range");
  std::lock_guard<std::mutex> lock(mutex_);
  if (!rows_[j]) {
    rows_[j] = std::make_unique<std::vector<StructureEntry>>(compute_row(j));
  }
  return *rows_[j];
}

std::vector<StructureEntry> LieAlgebra::compute_row(int j) const {
  // Only elements sharing a generator index with B_j can fail to commute
  // with it; everything else is skipped without a Pauli product.
  const int m = 2 * basis_.n();
  const auto [mu, nu] = basis_.generators(j);
  std::vector<int> candidates;
  if (mu == 0) return {};
  if (nu == 0) {
    for (int a = 1; a <= m; ++a) {
      if (a != mu) {
        candidates.push_back(basis_.linear_index(a));
        candidates.push_back(basis_.quadratic_index(mu, a));
      }
    }
  } else {
    candidates.push_back(basis_.linear_index(mu));
    candidates.push_back(basis_.linear_index(nu));
    for (int a = 1; a <= m; ++a) {
      if (a != mu && a != nu) {
        candidates.push_back(basis_.quadratic_index(mu, a));
        candidates.push_back(basis_.quadratic_index(nu, a));
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<StructureEntry> out;
  for (int i : candidates) {
    StructureEntry e{};
    if (commutator_entry(basis_, j, i, e)) out.push_back(e);
  }
  return out;
}

std::shared_ptr<const LieAlgebra> lie_algebra(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const LieAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const LieAlgebra>(n);
  return slot;
}

std::vector<std::pair<int, cplx>> lie_coefficients_sparse(const GateExponent& g,
                                                          const LieBasis& basis) {
  if (g.n() != basis.n()) throw DimensionError("gate and basis have different line counts");
  std::vector<std::pair<int, cplx>> xi;
  // 2 a c_mu c_nu = (-2i a) (i c_mu c_nu)
  for (const auto& [key, a] : g.quadratic()) {
    if (a != 0.0) xi.emplace_back(basis.quadratic_index(key.first, key.second), cplx(0, -2) * a);
  }
  for (const auto& [sigma, b] : g.linear()) {
    if (b != 0.0) xi.emplace_back(basis.linear_index(sigma), b);
  }
  if (g.s() != 0.0) xi.emplace_back(basis.identity_index(), g.s());
  return xi;
}

Eigen::VectorXcd lie_coefficients(const GateExponent& g, const LieBasis& basis) {
  Eigen::VectorXcd xi = Eigen::VectorXcd::Zero(basis.dim());
  for (const auto& [j, v] : lie_coefficients_sparse(g, basis)) xi(j) += v;
  return xi;
}

Eigen::MatrixXcd adjoint_transfer(const Eigen::VectorXcd& xi, const LieAlgebra& algebra) {
  const int d = algebra.dim();
  if (xi.size() != d) throw DimensionError("coefficient vector does not match the basis");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    if (xi(j) == 0.0) continue;
    for (const StructureEntry& e : algebra.row(j)) m(e.i, e.k) += xi(j) * e.value;
  }
  return linalg::expm(m);
}

Eigen::VectorXcd lie_observable(const Observable& obs, const LieBasis& basis) {
  Eigen::VectorXcd o = Eigen::VectorXcd::Zero(basis.dim());
  switch (obs.kind) {
    case Observable::Kind::z:
      if (obs.line < 1 || obs.line > basis.n()) {
        throw PreconditionError("measured line " + std::to_string(obs.line) + " outside 1.." +
                                std::to_string(basis.n()));
      }
      // Z_k = -(i c_{2k-1} c_{2k})
      o(basis.quadratic_index(2 * obs.line - 1, 2 * obs.line)) = -1.0;
      break;
    case Observable::Kind::x1:
      o(basis.linear_index(1)) = 1.0;
      break;
    case Observable::Kind::y1:
      o(basis.linear_index(2)) = 1.0;
      break;
  }
  return o;
}

namespace {

int find_root(std::unordered_map<int, int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// o <- exp(M)^T o, where M is assembled from the sparse coefficients and
// exponentiated one connected block at a time.
void apply_transpose_transfer(Eigen::VectorXcd& o, const std::vector<std::pair<int, cplx>>& xi,
                              const LieAlgebra& algebra) {
  struct Term {
    int i;
    int k;
    cplx v;
  };
  std::vector<Term> terms;
  std::unordered_map<int, int> parent;
  for (const auto& [j, x] : xi) {
    for (const StructureEntry& e : algebra.row(j)) {
      terms.push_back({e.i, e.k, x * e.value});
      parent.try_emplace(e.i, e.i);
      parent.try_emplace(e.k, e.k);
      const int a = find_root(parent, e.i);
      const int b = find_root(parent, e.k);
      if (a != b) parent[a] = b;
    }
  }
  if (terms.empty()) return;

  std::map<int, std::vector<int>> members;
  for (const auto& [x, _] : parent) members[find_root(parent, x)].push_back(x);
  std::unordered_map<int, std::pair<int, int>> where;  // index -> (block, local)
  std::vector<std::vector<int>> blocks;
  for (auto& [root, idx] : members) {
    std::sort(idx.begin(), idx.end());
    const int b = static_cast<int>(blocks.size());
    for (int l = 0; l < static_cast<int>(idx.size()); ++l) where[idx[l]] = {b, l};
    blocks.push_back(std::move(idx));
  }
  std::vector<Eigen::MatrixXcd> mats(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto s = static_cast<Eigen::Index>(blocks[b].size());
    mats[b] = Eigen::MatrixXcd::Zero(s, s);
  }
  for (const Term& t : terms) {
    const auto [b, li] = where[t.i];
    mats[b](li, where[t.k].second) += t.v;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& idx = blocks[b];
    const auto s = static_cast<Eigen::Index>(idx.size());
    Eigen::VectorXcd local(s);
    bool any = false;
    for (Eigen::Index l = 0; l < s; ++l) {
      local(l) = o(idx[l]);
      any = any || local(l) != 0.0;
    }
    if (!any) continue;
    local = linalg::expm(mats[b]).transpose() * local;
    for (Eigen::Index l = 0; l < s; ++l) o(idx[l]) = local(l);
  }
}

}  // namespace

Eigen::VectorXcd lie_heisenberg(std::span<const GateExponent> gates, const Observable& obs,
                                const LieAlgebra& algebra) {
  const LieBasis& basis = algebra.basis();
  Eigen::VectorXcd o = lie_observable(obs, basis);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    auto xi = lie_coefficients_sparse(*it, basis);
    for (auto& [j, v] : xi) v = -v;
    apply_transpose_transfer(o, xi, algebra);
  }
  return o;
}

SimResult simulate_lie(std::span<const GateExponent> gates, const ProductState& state,
                       const Observable& obs, const SimOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = state.n();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].n() != n) {
      throw DimensionError("gate " + std::to_string(i) + " is on " +
                           std::to_string(gates[i].n()) + " lines, circuit has " +
                           std::to_string(n));
    }
  }
  const auto algebra = lie_algebra(n);
  const Eigen::VectorXcd o = lie_heisenberg(gates, obs, *algebra);
  cplx value = 0.0;
  for (int k = 0; k < algebra->dim(); ++k) {
    if (o(k) != 0.0) value += o(k) * expectation(state, algebra->basis().element(k));
  }
  SimResult result;
  result.expectation = value;
  result.engine = "lie";
  result.gates = static_cast<int>(gates.size());
  for (const GateExponent& g : gates) result.det_factor *= std::exp(g.s());
  finish_result(result, options);
  result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  return result;
}

}  // namespace mgsim
