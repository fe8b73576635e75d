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

#ifndef LOSSYCV_CHANNEL_HPP
#define LOSSYCV_CHANNEL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace lossycv {

/// Default step size in units of 1/kappa2.
inline constexpr double kDefaultKappa2Tau = 1e-4;

/// Lossy probing channel between two gases.
struct ChannelParams {
  double epsilon = 0.0;  // intensity loss, [0, 1)
  double r = 1.0;        // probe squeezing, covariance diag(1/r, r)
  double kappa2 = 1.0;   // coupling rate
  double tau = kDefaultKappa2Tau;  // light segment duration
  double t_final = 1.0;

  /// Per-segment coupling, kappa_tau^2 = kappa2 * tau.
  double kappa_tau() const { return std::sqrt(kappa2 * tau); }
  /// Number of segments needed to reach t_final.
  long steps() const { return std::lround(t_final / tau); }

  void validate() const {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
      throw std::invalid_argument("epsilon must lie in [0, 1), got " +
                                  std::to_string(epsilon));
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("r must be positive, got " +
                                  std::to_string(r));
    }
    if (!(kappa2 > 0.0)) {
      throw std::invalid_argument("kappa2 must be positive, got " +
                                  std::to_string(kappa2));
    }
    if (!(tau > 0.0)) {
      throw std::invalid_argument("tau must be positive, got " +
                                  std::to_string(tau));
    }
    if (!(t_final >= 0.0)) {
      throw std::invalid_argument("t must be non-negative, got " +
                                  std::to_string(t_final));
    }
  }
};

/// How the probe light is expressed in the detected / undetected output
/// modes before it meets the interaction Hamiltonian.
///
/// kFlippedVacuumPort applies the loss rotation with the undetected port
/// phase-flipped, i.e. the splitter of beam_splitter_map followed by a pi
/// rotation of the vacuum output. This is the orientation that yields the
/// one-way closed-form covariances and the 1/3 negativity plateau.
///
/// kDirect uses beam_splitter_map unchanged. Var(x1 - x2), Var(p1 + p2) and
/// the whole symmetric protocol are identical under both; the individual x
/// variances of the one-way scheme (and hence its negativity) are not.
enum class LightBasis { kFlippedVacuumPort, kDirect };

inline const char* to_string(LightBasis basis) {
  return basis == LightBasis::kFlippedVacuumPort ? "flipped-vacuum" : "direct";
}

}  // namespace lossycv

#endif  // LOSSYCV_CHANNEL_HPP
