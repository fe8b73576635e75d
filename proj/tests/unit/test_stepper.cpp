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

#include "lossycv/asymmetric.hpp"
#include "lossycv/hamiltonian.hpp"
#include "lossycv/stepper.hpp"

namespace lossycv {
namespace {

// Generic attach / evolve / discard / measure path.
GaussianState reference_step(const GaussianState& atoms,
                             const GaussianState& light,
                             const SymplecticMap& map, const ModeLabel& meas,
                             Quadrature q) {
  GaussianState joint = apply_symplectic(attach(atoms, light), map);
  for (const auto& m : light.modes()) {
    if (!(m == meas)) joint = discard(joint, m);
  }
  return homodyne_update(joint, meas, q);
}

TEST(HomodyneStep, MatchesGenericOperations) {
  const ChannelParams p{0.4, 3.0, 1.0, 0.05, 1.0};
  const auto a1 = ModeLabel::atom1();
  const auto a2 = ModeLabel::atom2();
  for (LightBasis basis : {LightBasis::kFlippedVacuumPort, LightBasis::kDirect}) {
    const GaussianState light = probe_light(p.epsilon, p.r, basis);
    const SymplecticMap map = asymmetric_step_map(p);
    const HomodyneStep step({a1, a2}, map, light, ModeLabel::signal(),
                            Quadrature::kX);
    GaussianState fast = vacuum_state({a1, a2});
    GaussianState slow = fast;
    for (int i = 0; i < 25; ++i) {
      fast = step.apply(fast);
      slow = reference_step(slow, light, map, ModeLabel::signal(),
                            Quadrature::kX);
    }
    EXPECT_LT((fast.gamma() - slow.gamma()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(HomodyneStep, NoInteractionLeavesStateAlone) {
  const auto a1 = ModeLabel::atom1();
  const auto sig = ModeLabel::signal();
  const HomodyneStep step({a1},
                          bilinear_evolution({a1, sig}, {{0.0, a1, Quadrature::kP,
                                                          sig, Quadrature::kP}}),
                          squeezed_light_state(4.0, sig), sig, Quadrature::kX);
  Eigen::MatrixXd g(2, 2);
  g << 2.0, 0.3, 0.3, 1.5;
  const Eigen::MatrixXd before = g;
  step.apply(g);
  EXPECT_TRUE(g.isApprox(before));
}

TEST(HomodyneStep, RejectsBadLayouts) {
  const auto a1 = ModeLabel::atom1();
  const auto sig = ModeLabel::signal();
  const SymplecticMap id{{a1, sig}, Eigen::MatrixXd::Identity(4, 4)};
  EXPECT_THROW(HomodyneStep({a1}, id, vacuum_state({a1}), a1, Quadrature::kX),
               std::invalid_argument);
  EXPECT_THROW(HomodyneStep({a1}, id, vacuum_state({sig}), ModeLabel::vacuum(),
                            Quadrature::kX),
               std::invalid_argument);
}

}  // namespace
}  // namespace lossycv
