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

#include "mgsim/random_circuit.hpp"

#include <algorithm>
#include <cmath>

#include "mgsim/linalg.hpp"

namespace mgsim {

namespace {

double gauss(std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(rng);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Coefficient of a Hermitian generator: i r keeps exp(.) unitary, the real
// part breaks it.
cplx generator_coeff(std::mt19937_64& rng, double scale, double nonunitary) {
  return cplx(nonunitary * gauss(rng), scale * gauss(rng));
}

}  // namespace

Mat2 random_gate2(std::mt19937_64& rng, double nonunitary) {
  Eigen::MatrixXcd h(2, 2);
  const double a = gauss(rng);
  const double d = gauss(rng);
  const cplx b(gauss(rng), gauss(rng));
  h << a, b, std::conj(b), d;
  Eigen::MatrixXcd g(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) g(r, c) = cplx(gauss(rng), gauss(rng));
  }
  return linalg::expm(cplx(0, 1) * h + nonunitary * g);
}

GateRecord random_gate(const std::string& cls, int n, std::mt19937_64& rng,
                       const RandomCircuitOptions& options) {
  const double eps = options.nonunitary;
  if (cls == "gvw") {
    GvwGate x;
    x.k = uniform(rng, 1, n - 1);
    x.v = random_gate2(rng, eps);
    const Mat2 w0 = random_gate2(rng, eps);
    x.w = w0 * std::sqrt(x.v.determinant() / w0.determinant());
    return x;
  }
  if (cls == "diag") {
    DiagGate x;
    x.k = uniform(rng, 1, n - 1);
    x.l = uniform(rng, x.k + 1, n);
    for (int i = 0; i < 3; ++i) x.d[i] = std::exp(generator_coeff(rng, 1.0, eps));
    x.d[3] = x.d[1] * x.d[2] / x.d[0];
    return x;
  }
  if (cls == "mg12") {
    GeneratorCoeffs11 alpha;
    for (cplx& a : alpha) a = generator_coeff(rng, 0.5, eps);
    return Mg12Gate{exp_L(alpha)};
  }
  if (cls == "u1") return U1Gate{random_gate2(rng, eps)};

  // Raw exponent on a short window of consecutive lines.
  const int w = uniform(rng, 1, std::min(n, std::max(1, options.exp_window)));
  const int lo = uniform(rng, 1, n - w + 1);
  const int first = 2 * lo - 1;
  const int last = 2 * (lo + w - 1);
  GateExponent g(n);
  const int pairs = uniform(rng, 1, 3);
  for (int t = 0; t < pairs; ++t) {
    const int mu = uniform(rng, first, last);
    int nu = uniform(rng, first, last - 1);
    if (nu >= mu) ++nu;
    // 2 a c_mu c_nu is anti-Hermitian for real a.
    g.add_a(mu, nu, cplx(0.5 * gauss(rng), eps * gauss(rng)));
  }
  if (lo == 1) {
    const int linear = uniform(rng, 0, 2);
    for (int t = 0; t < linear; ++t) {
      g.add_b(uniform(rng, first, last), generator_coeff(rng, 0.5, eps));
    }
  }
  g.set_s(generator_coeff(rng, 0.3, eps));
  return ExpGate{g};
}

Circuit random_circuit(const RandomCircuitOptions& options, std::mt19937_64& rng) {
  Circuit c;
  c.n = options.n;
  std::vector<std::string> classes;
  for (const std::string& cls : options.classes) {
    if ((cls == "gvw" || cls == "mg12" || cls == "diag") && c.n < 2) continue;
    classes.push_back(cls);
  }
  if (classes.empty()) classes.push_back("u1");

  if (options.random_state) {
    std::vector<ProductState::Qubit> qubits;
    for (int line = 0; line < c.n; ++line) {
      ProductState::Qubit q{cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng))};
      const double norm = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
      q[0] /= norm;
      q[1] /= norm;
      qubits.push_back(q);
    }
    c.state = ProductState(std::move(qubits));
  } else {
    c.state = ProductState::zeros(c.n);
  }
  for (int i = 0; i < options.depth; ++i) {
    const auto& cls = classes[uniform(rng, 0, static_cast<int>(classes.size()) - 1)];
    c.gates.push_back(random_gate(cls, c.n, rng, options));
  }
  c.measure = uniform(rng, 1, c.n);
  return c;
}

}  // namespace mgsim
