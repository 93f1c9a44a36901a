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

#include <gtest/gtest.h>

#include "mgsim/error.hpp"
#include "mgsim/oracle.hpp"
#include "test_support.hpp"

namespace mgsim {
namespace {

TEST(Jw, TwoLineStrings) {
  EXPECT_EQ(jw(2, 1).str(), "+XI");
  EXPECT_EQ(jw(2, 2).str(), "+YI");
  EXPECT_EQ(jw(2, 3).str(), "+ZX");
  EXPECT_EQ(jw(2, 4).str(), "+ZY");
}

TEST(Jw, ReversedTwoLineStrings) {
  for (int mu = 1; mu <= 4; ++mu) {
    const PauliString s = jw(2, mu);
    const PauliString r = jw_tilde2(mu);
    EXPECT_EQ(r.get(1), s.get(2));
    EXPECT_EQ(r.get(2), s.get(1));
  }
  EXPECT_EQ(jw_tilde2(1).str(), "+IX");
}

TEST(Jw, IndexRange) {
  EXPECT_THROW(jw(3, 0), PreconditionError);
  EXPECT_THROW(jw(3, 7), PreconditionError);
  EXPECT_THROW(jw_tilde2(5), PreconditionError);
}

TEST(C0, Constructions) {
  EXPECT_EQ(c0(3, C0Mode::parity).str(), "+ZZZ");
  EXPECT_EQ(c0(3, C0Mode::extra_line).str(), "+ZZZX");
}

class FamilyTest : public ::testing::TestWithParam<C0Mode> {};

TEST_P(FamilyTest, CliffordRelationsAreExact) {
  for (int n = 1; n <= 8; ++n) {
    const JwFamily f(n, GetParam());
    for (int mu = 0; mu <= 2 * n; ++mu) {
      for (int nu = 0; nu <= 2 * n; ++nu) {
        for (bool use_d : {false, true}) {
          const PauliString& p = use_d ? f.d(mu) : f.c(mu);
          const PauliString& q = use_d ? f.d(nu) : f.c(nu);
          const PauliString pq = pauli_mul(p, q);
          const PauliString qp = pauli_mul(q, p);
          if (mu == nu) {
            EXPECT_TRUE(pq.is_identity());
            EXPECT_EQ(pq.phase_pow(), 0);
          } else {
            EXPECT_TRUE(pq.same_masks(qp));
            EXPECT_EQ((pq.phase_pow() - qp.phase_pow() + 4) % 4, 2);
          }
        }
      }
    }
  }
}

TEST_P(FamilyTest, DOperatorsAreHermitian) {
  const JwFamily f(4, GetParam());
  for (int mu = 0; mu <= 8; ++mu) {
    EXPECT_TRUE(f.d(mu).is_hermitian());
    EXPECT_EQ(d_op(f, mu), f.d(mu));
  }
  EXPECT_EQ(f.d(0), f.c(0));
}

TEST_P(FamilyTest, MatchesDenseDefinition) {
  const int n = 3;
  const JwFamily f(n, GetParam());
  const int w = f.width();
  EXPECT_EQ(w, GetParam() == C0Mode::parity ? n : n + 1);
  for (int mu = 1; mu <= 2 * n; ++mu) {
    const Eigen::MatrixXcd c = oracle::dense_matrix(f.c(mu));
    const Eigen::MatrixXcd c0m = oracle::dense_matrix(f.c(0));
    const Eigen::MatrixXcd d = oracle::dense_matrix(f.d(mu));
    EXPECT_LT(testing::max_abs(d - cplx(0, 1) * c * c0m), 1e-15);
  }
}

INSTANTIATE_TEST_SUITE_P(BothModes, FamilyTest,
                         ::testing::Values(C0Mode::parity, C0Mode::extra_line));

}  // namespace
}  // namespace mgsim
