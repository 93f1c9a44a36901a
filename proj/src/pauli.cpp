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

#include "mgsim/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "mgsim/error.hpp"

namespace mgsim {
namespace {

constexpr int kWordBits = 64;

int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }

int mod4(int k) { return ((k % 4) + 4) % 4; }

void check_line(int n, int line) {
  if (line < 1 || line > n) {
    throw PreconditionError("line " + std::to_string(line) +
                            " outside 1.." + std::to_string(n));
  }
}

// Per-line expectation values <I>, <X>, <Z>, <Y> indexed by Pauli bits.
std::array<cplx, 4> line_expectations(const ProductState::Qubit& q) {
  const cplx a = q[0];
  const cplx b = q[1];
  const cplx ab = std::conj(a) * b;
  const cplx ba = std::conj(b) * a;
  return {std::norm(a) + std::norm(b), ab + ba,
          std::norm(a) - std::norm(b), cplx(0, -1) * ab + cplx(0, 1) * ba};
}

}  // namespace

cplx i_pow(int k) {
  switch (mod4(k)) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

PauliString::PauliString(int n)
    : n_(n), x_(word_count(n), 0), z_(word_count(n), 0) {
  if (n < 0) throw PreconditionError("negative line count");
}

PauliString PauliString::from_string(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  PauliString p(static_cast<int>(text.size() - pos));
  for (int line = 1; pos < text.size(); ++pos, ++line) {
    switch (text[pos]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.set(line, Pauli::X);
        break;
      case 'Y':
        p.set(line, Pauli::Y);
        break;
      case 'Z':
        p.set(line, Pauli::Z);
        break;
      default:
        throw PreconditionError(std::string("bad Pauli character '") +
                                text[pos] + "'");
    }
  }
  p.phase_ = mod4(phase);
  return p;
}

PauliString PauliString::single(int n, int line, Pauli p) {
  PauliString s(n);
  s.set(line, p);
  return s;
}

Pauli PauliString::get(int line) const {
  check_line(n_, line);
  const int q = line - 1;
  const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
  const int w = q / kWordBits;
  const int xb = (x_[w] & bit) ? 1 : 0;
  const int zb = (z_[w] & bit) ? 2 : 0;
  return static_cast<Pauli>(xb | zb);
}

void PauliString::set(int line, Pauli p) {
  check_line(n_, line);
  const int q = line - 1;
  const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
  const int w = q / kWordBits;
  const auto bits = static_cast<std::uint8_t>(p);
  x_[w] = (bits & 1) ? (x_[w] | bit) : (x_[w] & ~bit);
  z_[w] = (bits & 2) ? (z_[w] | bit) : (z_[w] & ~bit);
}

cplx PauliString::scalar() const { return coeff_ * i_pow(phase_); }

PauliString& PauliString::mul_i(int k) {
  phase_ = mod4(phase_ + k);
  return *this;
}

PauliString& PauliString::scale(cplx factor) {
  coeff_ *= factor;
  return *this;
}

PauliString PauliString::unit() const {
  PauliString u = *this;
  u.phase_ = 0;
  u.coeff_ = 1.0;
  return u;
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

bool PauliString::same_masks(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

int PauliString::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
  return w;
}

bool PauliString::is_hermitian() const {
  return std::abs(scalar().imag()) == 0.0;
}

std::string PauliString::str() const {
  static constexpr char kNames[] = {'I', 'X', 'Z', 'Y'};
  std::string out = (phase_ >= 2) ? "-" : "+";
  if (phase_ % 2 == 1) out += 'i';
  for (int line = 1; line <= n_; ++line) {
    out += kNames[static_cast<int>(get(line))];
  }
  if (coeff_ != cplx(1.0)) {
    std::ostringstream os;
    os << "*(" << coeff_.real() << "," << coeff_.imag() << ")";
    out += os.str();
  }
  return out;
}

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  if (p.n_ != q.n_) {
    throw DimensionError("pauli_mul: line counts " + std::to_string(p.n_) +
                         " and " + std::to_string(q.n_) + " differ");
  }
  PauliString r(p.n_);
  int phase = p.phase_ + q.phase_;
  for (std::size_t w = 0; w < p.x_.size(); ++w) {
    const std::uint64_t x1 = p.x_[w], z1 = p.z_[w];
    const std::uint64_t x2 = q.x_[w], z2 = q.z_[w];
    const std::uint64_t px = x1 & ~z1, py = x1 & z1, pz = ~x1 & z1;
    const std::uint64_t qx = x2 & ~z2, qy = x2 & z2, qz = ~x2 & z2;
    // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
    const std::uint64_t plus = (px & qy) | (py & qz) | (pz & qx);
    const std::uint64_t minus = (py & qx) | (pz & qy) | (px & qz);
    phase += std::popcount(plus) - std::popcount(minus);
    r.x_[w] = x1 ^ x2;
    r.z_[w] = z1 ^ z2;
  }
  r.phase_ = mod4(phase);
  r.coeff_ = p.coeff_ * q.coeff_;
  return r;
}

Commutation commutation_sign(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw DimensionError("commutation_sign: line counts differ");
  int parity = 0;
  const auto& x1 = p.x_words();
  const auto& z1 = p.z_words();
  const auto& x2 = q.x_words();
  const auto& z2 = q.z_words();
  for (std::size_t w = 0; w < x1.size(); ++w) {
    parity ^= std::popcount((x1[w] & z2[w]) ^ (z1[w] & x2[w])) & 1;
  }
  return parity ? Commutation::anticommute : Commutation::commute;
}

PauliString embed(const PauliString& p, std::span<const int> target_lines,
                  int n) {
  if (static_cast<int>(target_lines.size()) != p.n()) {
    throw DimensionError("embed: need one target line per line of the string");
  }
  PauliString out(n);
  std::vector<bool> used(n + 1, false);
  for (int i = 0; i < p.n(); ++i) {
    const int t = target_lines[i];
    check_line(n, t);
    if (used[t]) throw PreconditionError("embed: repeated target line");
    used[t] = true;
    out.set(t, p.get(i + 1));
  }
  out.mul_i(p.phase_pow());
  out.scale(p.coeff());
  return out;
}

std::size_t MaskKeyHash::operator()(const MaskKey& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto v : k.x) mix(v);
  for (auto v : k.z) mix(v * 0xff51afd7ed558ccdULL);
  return h;
}

PauliSum::PauliSum(int n, double drop_tol) : n_(n), drop_tol_(drop_tol) {}

void PauliSum::accumulate(MaskKey key, cplx value) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (std::abs(value) >= drop_tol_) terms_.emplace(std::move(key), value);
    return;
  }
  it->second += value;
  if (std::abs(it->second) < drop_tol_) terms_.erase(it);
}

void PauliSum::add(const PauliString& p, cplx factor) {
  if (p.n() != n_) throw DimensionError("PauliSum::add: line count mismatch");
  accumulate(MaskKey{p.x_words(), p.z_words()}, factor * p.scalar());
}

void PauliSum::add(const PauliSum& other, cplx factor) {
  if (other.n_ != n_) throw DimensionError("PauliSum::add: line count mismatch");
  for (const auto& [key, value] : other.terms_) accumulate(key, factor * value);
}

PauliSum& PauliSum::operator*=(cplx factor) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= factor;
    if (std::abs(it->second) < drop_tol_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

cplx PauliSum::coeff(const PauliString& p) const {
  auto it = terms_.find(MaskKey{p.x_words(), p.z_words()});
  return it == terms_.end() ? cplx(0) : it->second;
}

std::vector<std::pair<PauliString, cplx>> PauliSum::terms() const {
  std::vector<std::pair<PauliString, cplx>> out;
  out.reserve(terms_.size());
  for (const auto& [key, value] : terms_) {
    PauliString s(n_);
    for (int line = 1; line <= n_; ++line) {
      const int q = line - 1;
      const std::uint64_t bit = std::uint64_t{1} << (q % 64);
      const int xb = (key.x[q / 64] & bit) ? 1 : 0;
      const int zb = (key.z[q / 64] & bit) ? 2 : 0;
      s.set(line, static_cast<Pauli>(xb | zb));
    }
    out.emplace_back(std::move(s), value);
  }
  return out;
}

double PauliSum::max_abs_diff(const PauliSum& other) const {
  if (other.n_ != n_) throw DimensionError("max_abs_diff: line count mismatch");
  double worst = 0.0;
  for (const auto& [key, value] : terms_) {
    auto it = other.terms_.find(key);
    const cplx o = it == other.terms_.end() ? cplx(0) : it->second;
    worst = std::max(worst, std::abs(value - o));
  }
  for (const auto& [key, value] : other.terms_) {
    if (!terms_.contains(key)) worst = std::max(worst, std::abs(value));
  }
  return worst;
}

ProductState::ProductState(std::vector<Qubit> qubits, bool renormalize)
    : qubits_(std::move(qubits)) {
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    auto& q = qubits_[i];
    const double norm = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw PreconditionError("line " + std::to_string(i + 1) +
                              ": state vector has zero or non-finite norm");
    }
    if (std::abs(norm - 1.0) > kNormTol) {
      if (!renormalize) {
        throw PreconditionError("line " + std::to_string(i + 1) +
                                ": state vector not normalized (norm " +
                                std::to_string(norm) + ")");
      }
      q[0] /= norm;
      q[1] /= norm;
    }
  }
}

ProductState ProductState::zeros(int n) {
  return ProductState(std::vector<Qubit>(n, Qubit{1.0, 0.0}));
}

ProductState::Qubit ProductState::named(std::string_view token) {
  const double h = 1.0 / std::sqrt(2.0);
  if (token == "0") return {1.0, 0.0};
  if (token == "1") return {0.0, 1.0};
  if (token == "+") return {h, h};
  if (token == "-") return {h, -h};
  if (token == "i") return {h, cplx(0, h)};
  if (token == "-i") return {h, cplx(0, -h)};
  throw PreconditionError("unknown state token '" + std::string(token) + "'");
}

ProductState ProductState::with_zero_line() const {
  ProductState out = *this;
  out.qubits_.push_back({1.0, 0.0});
  return out;
}

cplx expectation(const ProductState& state, const PauliString& p) {
  if (state.n() != p.n()) throw DimensionError("expectation: line count mismatch");
  cplx value = p.scalar();
  const auto& xs = p.x_words();
  const auto& zs = p.z_words();
  for (std::size_t w = 0; w < xs.size(); ++w) {
    std::uint64_t active = xs[w] | zs[w];
    while (active) {
      const int b = std::countr_zero(active);
      active &= active - 1;
      const int q = static_cast<int>(w) * 64 + b;
      const int code = static_cast<int>((xs[w] >> b) & 1) |
                       (static_cast<int>((zs[w] >> b) & 1) << 1);
      value *= line_expectations(state.qubits()[q])[code];
    }
  }
  return value;
}

cplx expectation(const ProductState& state, const PauliSum& s) {
  if (state.n() != s.n()) throw DimensionError("expectation: line count mismatch");
  std::vector<std::array<cplx, 4>> table;
  table.reserve(state.n());
  for (const auto& q : state.qubits()) table.push_back(line_expectations(q));
  cplx total = 0.0;
  for (const auto& [key, coeff] : s.raw()) {
    cplx value = coeff;
    for (std::size_t w = 0; w < key.x.size(); ++w) {
      std::uint64_t active = key.x[w] | key.z[w];
      while (active) {
        const int b = std::countr_zero(active);
        active &= active - 1;
        const int code = static_cast<int>((key.x[w] >> b) & 1) |
                         (static_cast<int>((key.z[w] >> b) & 1) << 1);
        value *= table[w * 64 + b][code];
      }
    }
    total += value;
  }
  return total;
}

}  // namespace mgsim
