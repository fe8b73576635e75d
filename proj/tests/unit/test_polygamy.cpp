// Copyright 2026 The lossycv Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "lossycv/polygamy.hpp"

namespace lossycv {
namespace {

TEST(Polygamy, EqualSplitter) {
  for (int m : {2, 3, 5}) {
    const SymplecticMap s = equal_splitter(m);
    EXPECT_LT(symplectic_defect(s.matrix), 1e-14);
    for (int j = 0; j < m; ++j) {
      EXPECT_NEAR(s.matrix(2 * j, 0), 1.0 / std::sqrt(m), 1e-14);
      EXPECT_NEAR(s.matrix(2 * j + 1, 1), 1.0 / std::sqrt(m), 1e-14);
    }
  }
  EXPECT_THROW(equal_splitter(1), std::invalid_argument);
}

TEST(Polygamy, TwoSitesEqualHalfLoss) {
  RunOptions ro;
  ro.samples = 5;
  PolygamyOptions po;
  po.samples = 5;
  const ChannelParams p{0.0, 2.0, 1.0, 1e-3, 0.5};
  const PolygamyResult res = run_polygamy(2, p, po);
  EXPECT_DOUBLE_EQ(res.effective_epsilon, 0.5);
  const Trajectory ref = run_asymmetric({0.5, 2.0, 1.0, 1e-3, 0.5}, ro);
  ASSERT_EQ(res.pairs.size(), 2u);
  for (const auto& pair : res.pairs) {
    ASSERT_EQ(pair.trajectory.size(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
      EXPECT_LT((pair.trajectory[k].summary.gamma12 - ref[k].summary.gamma12)
                    .cwiseAbs()
                    .maxCoeff(),
                1e-12);
    }
  }
}

TEST(Polygamy, ReceiversAreEquivalent) {
  const PolygamyResult res = run_polygamy(5, {0.0, 0.7, 1.0, 1e-2, 1.0});
  ASSERT_EQ(res.pairs.size(), 5u);
  for (const auto& pair : res.pairs) {
    EXPECT_NEAR(pair.trajectory.back().summary.n,
                res.pairs.front().trajectory.back().summary.n, 1e-12);
  }
}

TEST(Polygamy, DirectBasisMatchesDirectTwoGas) {
  PolygamyOptions po;
  po.basis = LightBasis::kDirect;
  RunOptions ro;
  ro.basis = LightBasis::kDirect;
  const PolygamyResult res = run_polygamy(3, {0.0, 3.0, 1.0, 1e-2, 1.0}, po);
  const Trajectory ref = run_asymmetric({2.0 / 3.0, 3.0, 1.0, 1e-2, 1.0}, ro);
  EXPECT_LT((res.pairs[1].trajectory.back().summary.gamma12 -
             ref.back().summary.gamma12)
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(Polygamy, RejectsTooFewSites) {
  EXPECT_THROW(run_polygamy(1, {0.0, 2.0, 1.0, 1e-2, 1.0}),
               std::invalid_argument);
}

}  // namespace
}  // namespace lossycv
