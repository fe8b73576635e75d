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

#include "lossycv/epr.hpp"

#include <cmath>
#include <stdexcept>

#include "lossycv/entanglement.hpp"

namespace lossycv {

EprSourceDelta epr_source_delta(double epsilon, double r) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0) || !(r > 0.0)) {
    throw std::domain_error("epr_source_delta: need 0 <= eps <= 1 and r > 0");
  }
  const double arm = std::sqrt(1.0 - epsilon);
  return {1.0 + arm * (1.0 / r - 1.0), 1.0 - arm};
}

GaussianState two_mode_squeezed_state(double r) {
  if (!(r > 0.0)) {
    throw std::domain_error("two_mode_squeezed_state: r must be positive");
  }
  const double n = 0.5 * (r + 1.0 / r);
  const double k = 0.5 * (r - 1.0 / r);
  return GaussianState({ModeLabel::atom1(), ModeLabel::atom2()},
                       symmetric_covariance(n, k));
}

GaussianState lossy_epr_state(double epsilon, double r) {
  // Uniform loss per length: each half of the line transmits sqrt(1 - eps).
  const double arm_loss = 1.0 - std::sqrt(1.0 - epsilon);
  GaussianState state = two_mode_squeezed_state(r);
  state = loss_channel(state, ModeLabel::atom1(), arm_loss);
  return loss_channel(state, ModeLabel::atom2(), arm_loss);
}

}  // namespace lossycv
