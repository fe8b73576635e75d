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

#include "lossycv/gaussian_state.hpp"

namespace lossycv {
namespace {

const ModeLabel kA1 = ModeLabel::atom1();
const ModeLabel kA2 = ModeLabel::atom2();
const ModeLabel kSig = ModeLabel::signal();
const ModeLabel kVac = ModeLabel::vacuum();

TEST(GaussianState, VacuumIsIdentity) {
  for (Eigen::Index n : {1, 2, 3}) {
    const GaussianState v = vacuum_state(n);
    EXPECT_TRUE(v.gamma().isApprox(Eigen::MatrixXd::Identity(2 * n, 2 * n)));
    EXPECT_EQ(v.num_modes(), n);
  }
  EXPECT_THROW(vacuum_state(Eigen::Index{0}), std::invalid_argument);
}

TEST(GaussianState, RejectsMalformedCovariances) {
  EXPECT_THROW(GaussianState({kA1}, Eigen::MatrixXd::Identity(4, 4)),
               std::invalid_argument);
  EXPECT_THROW(GaussianState({kA1, kA1}, Eigen::MatrixXd::Identity(4, 4)),
               std::invalid_argument);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  bad(1, 1) = 0.0;
  EXPECT_THROW(GaussianState({kA1}, bad), std::invalid_argument);
  EXPECT_THROW(vacuum_state({kA1}).index_of(kA2), std::invalid_argument);
}

TEST(GaussianState, SqueezedLight) {
  EXPECT_TRUE(squeezed_light_state(1.0).gamma().isApprox(
      Eigen::MatrixXd::Identity(2, 2)));
  const Eigen::MatrixXd g = squeezed_light_state(10.0).gamma();
  EXPECT_DOUBLE_EQ(g(0, 0), 0.1);
  EXPECT_DOUBLE_EQ(g(1, 1), 10.0);
  const Eigen::MatrixXd h = squeezed_light_state(0.1).gamma();
  EXPECT_DOUBLE_EQ(h(0, 0), 10.0);
  EXPECT_DOUBLE_EQ(h(1, 1), 0.1);
  EXPECT_THROW(squeezed_light_state(0.0), std::domain_error);
  EXPECT_THROW(squeezed_light_state(-2.0), std::domain_error);
}

TEST(GaussianState, SqueezerOnVacuum) {
  const GaussianState s =
      apply_symplectic(vacuum_state({kA1}), single_mode_squeezer(4.0, kA1));
  EXPECT_NEAR(s.gamma()(0, 0), 0.25, 1e-15);
  EXPECT_NEAR(s.gamma()(1, 1), 4.0, 1e-15);
  const GaussianState same = apply_symplectic(
      vacuum_state({kA1, kA2}),
      {{kA1, kA2}, Eigen::MatrixXd::Identity(4, 4)});
  EXPECT_TRUE(same.gamma().isApprox(Eigen::MatrixXd::Identity(4, 4)));
}

TEST(GaussianState, BeamSplitterCorrelation) {
  EXPECT_TRUE(beam_splitter_map(0.0, kSig, kVac)
                  .matrix.isApprox(Eigen::MatrixXd::Identity(4, 4)));
  const GaussianState vv =
      apply_symplectic(vacuum_state({kSig, kVac}),
                       beam_splitter_map(0.4, kSig, kVac));
  EXPECT_TRUE(vv.gamma().isApprox(Eigen::MatrixXd::Identity(4, 4), 1e-14));

  const double eps = 0.36;
  const double r = 10.0;
  const GaussianState mixed = apply_symplectic(
      attach(squeezed_light_state(r, kSig), vacuum_state({kVac})),
      beam_splitter_map(eps, kSig, kVac));
  const double expected = std::sqrt(eps * (1.0 - eps)) * (1.0 - 1.0 / r);
  EXPECT_NEAR(expected, 0.432, 1e-12);
  EXPECT_NEAR(std::abs(mixed.gamma()(0, 2)), 0.432, 1e-12);
  EXPECT_LT(symplectic_defect(beam_splitter_map(eps, kSig, kVac).matrix),
            1e-15);
  EXPECT_THROW(beam_splitter_map(1.0, kSig, kVac), std::domain_error);
  EXPECT_THROW(beam_splitter_map(-0.1, kSig, kVac), std::domain_error);
}

TEST(GaussianState, LossChannel) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  g(0, 0) = g(2, 2) = 3.0;
  g(1, 1) = g(3, 3) = 3.0;
  g(0, 2) = g(2, 0) = 2.0;
  g(1, 3) = g(3, 1) = -2.0;
  const GaussianState s({kA1, kA2}, g);
  EXPECT_TRUE(loss_channel(s, kA1, 0.0).gamma().isApprox(g));
  const Eigen::MatrixXd full = loss_channel(s, kA1, 1.0).gamma();
  EXPECT_TRUE(full.topLeftCorner(2, 2).isApprox(Eigen::Matrix2d::Identity()));
  EXPECT_DOUBLE_EQ(full(0, 2), 0.0);
  EXPECT_DOUBLE_EQ(full(1, 3), 0.0);

  GaussianState split = attach(s, vacuum_state({kVac}));
  split = apply_symplectic(split, beam_splitter_map(0.45, kA1, kVac));
  split = discard(split, kVac);
  EXPECT_LT((split.gamma() - loss_channel(s, kA1, 0.45).gamma())
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
}

TEST(GaussianState, AttachAndDiscard) {
  const GaussianState light = squeezed_light_state(3.0, kSig);
  const GaussianState joint = attach(light, vacuum_state({kVac}));
  Eigen::MatrixXd want = Eigen::MatrixXd::Identity(4, 4);
  want(0, 0) = 1.0 / 3.0;
  want(1, 1) = 3.0;
  EXPECT_TRUE(joint.gamma().isApprox(want));
  EXPECT_TRUE(discard(joint, kVac).gamma().isApprox(light.gamma()));
  EXPECT_THROW(attach(light, light), std::invalid_argument);

  const GaussianState out = apply_symplectic(
      attach(vacuum_state({kSig}), vacuum_state({kVac})),
      beam_splitter_map(0.3, kSig, kVac));
  EXPECT_TRUE(discard(out, kVac).gamma().isApprox(Eigen::MatrixXd::Identity(2, 2)));
}

TEST(GaussianState, HomodyneByHand) {
  // x1, x2 correlated with [[2, 1], [1, 2]], p sector vacuum.
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  g(0, 0) = 2.0;
  g(2, 2) = 2.0;
  g(0, 2) = g(2, 0) = 1.0;
  const GaussianState s({kA1, kSig}, g);
  const GaussianState after = homodyne_update(s, kSig, Quadrature::kX);
  ASSERT_EQ(after.num_modes(), 1);
  EXPECT_NEAR(after.gamma()(0, 0), 1.5, 1e-14);
  EXPECT_NEAR(after.gamma()(1, 1), 1.0, 1e-14);

  const GaussianState product = attach(squeezed_light_state(5.0, kA1),
                                       vacuum_state({kSig}));
  EXPECT_TRUE(homodyne_update(product, kSig, Quadrature::kP)
                  .gamma()
                  .isApprox(squeezed_light_state(5.0, kA1).gamma()));
}

TEST(GaussianState, SymplecticEigenvalues) {
  Eigen::MatrixXd thermal = 3.0 * Eigen::MatrixXd::Identity(2, 2);
  EXPECT_NEAR(symplectic_eigenvalues(thermal)(0), 3.0, 1e-12);
  EXPECT_TRUE(is_physical(Eigen::MatrixXd::Identity(4, 4)));
  EXPECT_FALSE(is_physical(0.5 * Eigen::MatrixXd::Identity(2, 2)));
  EXPECT_LT(symplectic_defect(commutator_matrix(3)), 1e-15);
}

}  // namespace
}  // namespace lossycv
