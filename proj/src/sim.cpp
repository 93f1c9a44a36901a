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

#include "mgsim/sim.hpp"

#include <cmath>
#include <sstream>

#include "mgsim/error.hpp"

namespace mgsim {

PauliString Observable::pauli(int n) const {
  switch (kind) {
    case Kind::z:
      if (line < 1 || line > n) {
        throw PreconditionError("measured line " + std::to_string(line) + " outside 1.." +
                                std::to_string(n));
      }
      return PauliString::single(n, line, Pauli::Z);
    case Kind::x1:
      return PauliString::single(n, 1, Pauli::X);
    case Kind::y1:
      return PauliString::single(n, 1, Pauli::Y);
  }
  throw std::logic_error("unknown observable");
}

std::string Observable::str() const {
  switch (kind) {
    case Kind::z:
      return "Z" + std::to_string(line);
    case Kind::x1:
      return "X1";
    case Kind::y1:
      return "Y1";
  }
  return "?";
}

void finish_result(SimResult& result, const SimOptions& options) {
  const cplx e = result.expectation;
  if (std::abs(e.imag()) <= options.tol * std::max(1.0, std::abs(e))) {
    result.p0 = (1.0 + e.real()) / 2.0;
    result.p1 = (1.0 - e.real()) / 2.0;
  } else if (options.declared_unitary) {
    std::ostringstream os;
    os << "unitary circuit produced a complex expectation (" << e.real() << ", " << e.imag()
       << ")";
    throw ConsistencyError(os.str());
  }
}

}  // namespace mgsim
