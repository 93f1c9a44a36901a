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

#include "mgsim/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "mgsim/error.hpp"
#include "mgsim/random_circuit.hpp"

namespace mgsim {

double fit_exponent(std::span<const BenchPoint> points) {
  const auto m = static_cast<double>(points.size());
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const BenchPoint& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(std::max(p.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = m * sxx - sx * sx;
  if (points.size() < 2 || den <= 0.0) {
    throw PreconditionError("fitting an exponent needs at least two distinct n");
  }
  return (m * sxy - sx * sy) / den;
}

BenchReport run_bench(std::span<const int> ns, int gates, std::uint64_t seed, Engine engine) {
  if (gates < 1) throw PreconditionError("bench needs at least one gate");
  BenchReport report;
  report.engine = engine;
  std::mt19937_64 rng(seed);
  for (int n : ns) {
    if (n < 2) throw PreconditionError("bench needs n >= 2");
    RandomCircuitOptions opt;
    opt.n = n;
    opt.depth = gates;
    const Circuit c = random_circuit(opt, rng);
    RunOptions run;
    run.engine = engine;
    const auto start = std::chrono::steady_clock::now();
    run_circuit(c, run);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.points.push_back({n, gates, s, gates / std::max(s, 1e-12)});
  }
  if (report.points.size() >= 2) report.exponent = fit_exponent(report.points);
  return report;
}

}  // namespace mgsim
