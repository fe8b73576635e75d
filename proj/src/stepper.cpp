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

#include "lossycv/stepper.hpp"

#include <stdexcept>

#include "lossycv/linalg.hpp"

namespace lossycv {

HomodyneStep::HomodyneStep(std::vector<ModeLabel> kept,
                           const SymplecticMap& map, const GaussianState& light,
                           const ModeLabel& measured, Quadrature quadrature)
    : kept_(std::move(kept)) {
  for (const auto& m : kept_) {
    if (light.contains(m)) {
      throw std::invalid_argument("HomodyneStep: light overlaps kept modes");
    }
  }
  if (!light.contains(measured)) {
    throw std::invalid_argument("HomodyneStep: measured mode is not light");
  }
  std::vector<ModeLabel> joint = kept_;
  joint.insert(joint.end(), light.modes().begin(), light.modes().end());
  auto position = [&](const ModeLabel& m) -> Eigen::Index {
    for (std::size_t i = 0; i < joint.size(); ++i) {
      if (joint[i] == m) return static_cast<Eigen::Index>(i);
    }
    throw std::invalid_argument("HomodyneStep: map acts on unknown mode " +
                                to_string(m));
  };
  const auto n = static_cast<Eigen::Index>(2 * joint.size());
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
  std::vector<Eigen::Index> pos;
  for (const auto& m : map.modes) pos.push_back(position(m));
  const auto idx = quadrature_indices(pos);
  s(idx, idx) = map.matrix;

  const auto nk = static_cast<Eigen::Index>(2 * kept_.size());
  const Eigen::Index nl = n - nk;
  const Eigen::Index row =
      2 * position(measured) + quadrature_offset(quadrature);
  const Eigen::MatrixXd& l = light.gamma();
  const Eigen::MatrixXd s_kl = s.topRightCorner(nk, nl);
  const Eigen::RowVectorXd s_ml = s.row(row).tail(nl);

  s_kk_ = s.topLeftCorner(nk, nk);
  s_mk_ = s.row(row).head(nk);
  const_kk_ = s_kl * l * s_kl.transpose();
  const_km_ = s_kl * l * s_ml.transpose();
  const_mm_ = s_ml * l * s_ml.transpose();
  t_.resize(nk, nk);
  sym_.resize(nk, nk);
  j_km_.resize(nk);
  u_.resize(nk);
}

void HomodyneStep::apply(Eigen::MatrixXd& gamma) const {
  t_.noalias() = s_kk_ * gamma;
  j_km_.noalias() = t_ * s_mk_.transpose();
  j_km_ += const_km_;
  u_.noalias() = gamma * s_mk_.transpose();
  const double j_mm = s_mk_.dot(u_) + const_mm_;
  gamma.noalias() = t_ * s_kk_.transpose();
  gamma += const_kk_;
  if (j_mm > 0.0) {
    gamma.noalias() -= (j_km_ / j_mm) * j_km_.transpose();
  }
  sym_ = gamma.transpose();
  gamma = 0.5 * (gamma + sym_);
}

GaussianState HomodyneStep::apply(const GaussianState& state) const {
  Eigen::MatrixXd g = state.submatrix(kept_);
  if (state.num_modes() != static_cast<Eigen::Index>(kept_.size())) {
    throw std::invalid_argument("HomodyneStep: register does not match");
  }
  apply(g);
  return GaussianState(kept_, std::move(g));
}

}  // namespace lossycv
