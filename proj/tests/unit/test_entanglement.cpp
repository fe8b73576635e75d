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
#include <stdexcept>

#include "lossycv/entanglement.hpp"

namespace lossycv {
namespace {

TEST(Entanglement, PartialTranspose) {
  const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
  EXPECT_TRUE(partial_transpose(id).isApprox(id));
  const Eigen::Matrix4d g = two_mode_covariance(2.0, 1.5, 1.8, 1.2, 0.7, -0.4);
  const Eigen::Matrix4d pt = partial_transpose(g);
  EXPECT_DOUBLE_EQ(pt(1, 3), 0.4);
  EXPECT_DOUBLE_EQ(pt(0, 2), 0.7);
  EXPECT_TRUE(partial_transpose(pt).isApprox(g));
}

TEST(Entanglement, NegativityOfKnownStates) {
  const Negativity vac = negativity(Eigen::Matrix4d::Identity());
  EXPECT_DOUBLE_EQ(vac.n, 1.0);
  EXPECT_DOUBLE_EQ(vac.log_negativity, 0.0);

  const double r = 4.0;
  const Negativity tms = negativity(
      symmetric_covariance(0.5 * (r + 1.0 / r), 0.5 * (r - 1.0 / r)));
  EXPECT_NEAR(tms.n, 0.25, 1e-12);
  EXPECT_NEAR(tms.log_negativity, 2.0, 1e-12);

  EXPECT_NEAR(negativity(symmetric_covariance(1.2, 0.5)).n, 0.7, 1e-12);
}

TEST(Entanglement, RejectsUnphysical) {
  EXPECT_THROW(negativity(0.5 * Eigen::Matrix4d::Identity()),
               std::domain_error);
}

TEST(Entanglement, EprUncertainty) {
  EXPECT_DOUBLE_EQ(epr_uncertainty(Eigen::Matrix4d::Identity()).delta, 1.0);
  const EprUncertainty e = epr_uncertainty(symmetric_covariance(1.2, 0.5));
  EXPECT_NEAR(e.delta, 0.7, 1e-15);
  EXPECT_NEAR(e.x_half, 0.7, 1e-15);
  EXPECT_NEAR(e.p_half, 0.7, 1e-15);
}

TEST(Entanglement, Summary) {
  const TwoModeSummary s = summarize(symmetric_covariance(1.2, 0.5));
  ASSERT_TRUE(s.delta.has_value());
  EXPECT_NEAR(*s.delta, 0.7, 1e-15);
  EXPECT_NEAR(s.n, 0.7, 1e-12);
  EXPECT_FALSE(summarize(two_mode_covariance(2.0, 1.5, 1.8, 1.2, 0.7, -0.4))
                   .delta.has_value());
}

}  // namespace
}  // namespace lossycv
