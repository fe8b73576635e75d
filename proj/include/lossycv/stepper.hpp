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

#ifndef LOSSYCV_STEPPER_HPP
#define LOSSYCV_STEPPER_HPP

#include <vector>

#include "lossycv/gaussian_state.hpp"

namespace lossycv {

/// One interaction segment folded into a map on the kept register:
///
///   attach(light) -> apply_symplectic(map) -> discard unmeasured light
///   -> homodyne_update(measured, quadrature)
///
/// The light contribution is precomputed, so apply() costs a few small
/// matrix products and does not allocate. Not safe to share between threads.
class HomodyneStep {
 public:
  HomodyneStep(std::vector<ModeLabel> kept, const SymplecticMap& map,
               const GaussianState& light, const ModeLabel& measured,
               Quadrature quadrature);

  const std::vector<ModeLabel>& kept() const { return kept_; }

  /// Updates `gamma` (covariance of the kept modes, in kept() order).
  void apply(Eigen::MatrixXd& gamma) const;

  GaussianState apply(const GaussianState& state) const;

 private:
  std::vector<ModeLabel> kept_;
  Eigen::MatrixXd s_kk_;
  Eigen::RowVectorXd s_mk_;
  Eigen::MatrixXd const_kk_;
  Eigen::VectorXd const_km_;
  double const_mm_ = 0.0;

  mutable Eigen::MatrixXd t_;
  mutable Eigen::MatrixXd sym_;
  mutable Eigen::VectorXd j_km_;
  mutable Eigen::VectorXd u_;
};

}  // namespace lossycv

#endif  // LOSSYCV_STEPPER_HPP
