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

#ifndef LOSSYCV_EPR_HPP
#define LOSSYCV_EPR_HPP

#include "lossycv/gaussian_state.hpp"

namespace lossycv {

struct EprSourceDelta {
  double delta = 1.0;                      // 1 + sqrt(1-eps) (1/r - 1)
  double infinite_squeezing_bound = 0.0;   // 1 - sqrt(1-eps)
};

/// EPR uncertainty of a centrally placed two-mode squeezed source whose
/// arms each lose 1 - sqrt(1 - eps) of the intensity.
EprSourceDelta epr_source_delta(double epsilon, double r);

/// Pure two-mode squeezed state on (atom1, atom2) with EPR uncertainty 1/r:
/// n = (r + 1/r) / 2, k = (r - 1/r) / 2.
GaussianState two_mode_squeezed_state(double r);

/// Two-mode squeezed source with loss_channel applied to each arm.
GaussianState lossy_epr_state(double epsilon, double r);

}  // namespace lossycv

#endif  // LOSSYCV_EPR_HPP
