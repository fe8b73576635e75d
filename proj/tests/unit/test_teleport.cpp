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

#include "lossycv/asymmetric.hpp"
#include "lossycv/entanglement.hpp"
#include "lossycv/teleport.hpp"

namespace lossycv {
namespace {

TEST(Teleport, SymmetricFidelity) {
  EXPECT_DOUBLE_EQ(fidelity_symmetric(1.0), 0.5);
  EXPECT_DOUBLE_EQ(fidelity_symmetric(0.25), 0.8);
  EXPECT_NEAR(fidelity_symmetric(1e-12), 1.0, 1e-11);
  EXPECT_GT(fidelity_symmetric(0.3), fidelity_symmetric(0.31));
  EXPECT_THROW(fidelity_symmetric(0.0), std::domain_error);
}

TEST(Teleport, BraunsteinKimble) {
  EXPECT_DOUBLE_EQ(fidelity_bk(0.5, 0.5), 0.5);
  EXPECT_NEAR(fidelity_bk(1e-9, 1e-9), 1.0, 1e-8);
  EXPECT_THROW(fidelity_bk(0.0, 0.5), std::domain_error);
}

TEST(Teleport, LocalSqueezing) {
  const LocalSqueezing same = optimize_local_squeezing(0.3, 0.3);
  EXPECT_DOUBLE_EQ(same.s_opt, 1.0);
  EXPECT_DOUBLE_EQ(same.f_opt, fidelity_bk(0.3, 0.3));

  const LocalSqueezing opt = optimize_local_squeezing(0.1, 0.4);
  EXPECT_NEAR(opt.s_opt, 2.0, 1e-15);
  EXPECT_NEAR(opt.f_opt, 1.0 / 1.4, 1e-15);
  double best = 0.0;
  for (int i = 1; i <= 4000; ++i) {
    const double s = 0.001 * i;
    best = std::max(best, fidelity_bk(s * 0.1, 0.4 / s));
  }
  EXPECT_NEAR(best, opt.f_opt, 1e-9);
  EXPECT_GE(opt.f_opt, fidelity_bk(0.1, 0.4));
}

TEST(Teleport, CloneBound) {
  EXPECT_DOUBLE_EQ(clone_bound(1), 1.0);
  EXPECT_DOUBLE_EQ(clone_bound(2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(clone_bound(2), 1.0 / 1.5);
  EXPECT_NEAR(clone_bound(1000000), 0.5, 1e-6);
  EXPECT_THROW(clone_bound(0), std::domain_error);
}

TEST(Teleport, ReportFromSimulatedChannel) {
  const Trajectory run = run_asymmetric({0.5, 1.0, 1.0, 1e-3, 2.0});
  const auto& g = run.back().summary.gamma12;
  const FidelityReport rep = fidelity_report(g, 0.5);
  ASSERT_TRUE(rep.bound_clone.has_value());
  EXPECT_DOUBLE_EQ(*rep.bound_clone, 2.0 / 3.0);
  EXPECT_LE(rep.f_opt, *rep.bound_clone + 1e-6);
  EXPECT_GE(rep.f_opt, rep.f);
  const ChannelVariances v = channel_variances(g);
  const EprUncertainty e = epr_uncertainty(g);
  EXPECT_NEAR(2.0 * v.var_p_plus, e.p_half, 1e-15);
  EXPECT_NEAR(2.0 * v.var_x_minus, e.x_half, 1e-15);
  EXPECT_FALSE(fidelity_report(g, 0.3).bound_clone.has_value());
}

}  // namespace
}  // namespace lossycv
