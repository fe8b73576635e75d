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

#include "lossycv/symmetric.hpp"

namespace lossycv {
namespace {

TEST(Riccati, Coefficients) {
  const RiccatiCoeffs c = riccati_coeffs(0.0, 3.0, 2.0);
  EXPECT_DOUBLE_EQ(c.a, 0.0);
  EXPECT_DOUBLE_EQ(c.b, 24.0);
  EXPECT_THROW(riccati_coeffs(1.0, 1.0, 1.0), std::domain_error);
  // a = b at the coherent-light threshold.
  const RiccatiCoeffs edge = riccati_coeffs(0.8, 1.0, 1.0);
  EXPECT_NEAR(edge.a, edge.b, 1e-15);
  for (double t : {0.0, 0.3, 5.0, 100.0}) {
    EXPECT_NEAR(delta_closed_form(edge, t), 1.0, 1e-12);
  }
}

TEST(Riccati, ClosedFormLimits) {
  const RiccatiCoeffs c = riccati_coeffs(0.3, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(delta_closed_form(c, 0.0), 1.0);
  EXPECT_NEAR(delta_closed_form(c, 200.0), std::sqrt(c.a / c.b), 1e-12);
  EXPECT_NEAR(delta_closed_form(riccati_coeffs(0.0, 2.0, 1.0), 3.0),
              1.0 / (1.0 + 24.0), 1e-15);
}

TEST(Riccati, SteadyState) {
  EXPECT_DOUBLE_EQ(delta_steady_state(0.0, 3.0), 0.0);
  for (double eps : {0.1, 0.5, 0.79}) {
    EXPECT_NEAR(delta_steady_state(eps, 1.0),
                std::sqrt(eps / (4.0 * (1.0 - eps))), 1e-15);
    EXPECT_NEAR(delta_steady_state(eps, optimal_r(eps)), eps, 1e-14);
  }
  EXPECT_THROW(delta_steady_state(1.0, 1.0), std::domain_error);
}

TEST(Riccati, OptimalSqueezing) {
  EXPECT_DOUBLE_EQ(optimal_r(0.5), 1.0);
  EXPECT_DOUBLE_EQ(optimal_r(0.2), 4.0);
  EXPECT_NEAR(optimal_r(0.9), 1.0 / 9.0, 1e-15);
  EXPECT_DOUBLE_EQ(min_delta(0.9), 0.9);
  EXPECT_THROW(optimal_r(0.0), std::domain_error);
  EXPECT_THROW(min_delta(1.0), std::domain_error);
  const ScalarMinimum m = minimize_steady_state_delta(0.2, 0.01, 100.0);
  EXPECT_NEAR(m.argument, 4.0, 1e-6);
  EXPECT_NEAR(m.value, 0.2, 1e-12);
}

TEST(Symmetric, StepperFollowsRiccati) {
  const Trajectory run = run_symmetric({0.4, 3.0, 1.0, 1e-3, 1.0});
  const RiccatiCoeffs c = riccati_coeffs(0.4, 3.0, 1.0);
  for (const auto& p : run) {
    EXPECT_NEAR(p.summary.epr.delta, delta_closed_form(c, p.t),
                1e-5 * delta_closed_form(c, p.t));
    EXPECT_TRUE(has_symmetric_form(p.summary.gamma12, 1e-6));
  }
}

TEST(Symmetric, SequentialOrderBreaksSymmetricForm) {
  SymmetricOptions options;
  options.order = SubstepOrder::kSequential;
  const Trajectory run = run_symmetric({0.4, 3.0, 1.0, 1e-3, 1.0}, options);
  const auto& s = run.back().summary;
  EXPECT_GT(std::abs(s.c_x + s.c_p), 1e-6);
  const RiccatiCoeffs c = riccati_coeffs(0.4, 3.0, 1.0);
  EXPECT_NEAR(s.epr.delta, delta_closed_form(c, 1.0), 1e-3);
}

TEST(Symmetric, DeltaDoesNotDependOnBasis) {
  SymmetricOptions direct;
  direct.basis = LightBasis::kDirect;
  const double a = run_symmetric({0.3, 2.0, 1.0, 1e-2, 1.0}).back().summary.epr.delta;
  const double b =
      run_symmetric({0.3, 2.0, 1.0, 1e-2, 1.0}, direct).back().summary.epr.delta;
  EXPECT_NEAR(a, b, 1e-12);
}

TEST(Symmetric, RichardsonImprovesAccuracy) {
  const ChannelParams p{0.3, 2.0, 1.0, 4e-3, 1.0};
  SymmetricOptions options;
  options.samples = 5;
  const auto extrapolated = run_symmetric_richardson(p, options);
  const Trajectory raw = run_symmetric(p, options);
  const RiccatiCoeffs c = riccati_coeffs(0.3, 2.0, 1.0);
  const double exact = delta_closed_form(c, 1.0);
  EXPECT_LT(std::abs(extrapolated.back().delta - exact),
            0.1 * std::abs(raw.back().summary.epr.delta - exact));
}

}  // namespace
}  // namespace lossycv
