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

#ifndef LOSSYCV_ASYMMETRIC_HPP
#define LOSSYCV_ASYMMETRIC_HPP

#include <vector>

#include "lossycv/channel.hpp"
#include "lossycv/entanglement.hpp"
#include "lossycv/gaussian_state.hpp"

namespace lossycv {

struct RunOptions {
  /// Number of sampling intervals; a run emits samples + 1 points from
  /// t = 0 to t_final (fewer if there are fewer steps than samples).
  long samples = 100;
  LightBasis basis = LightBasis::kFlippedVacuumPort;
};

struct TrajectoryPoint {
  double t = 0.0;
  TwoModeSummary summary;
};

using Trajectory = std::vector<TrajectoryPoint>;

/// Step indices at which a run of `steps` segments is sampled.
std::vector<long> sample_steps(long steps, long samples);

/// One-segment propagator of the one-way probing Hamiltonian
///   H = kappa_tau sqrt(1-eps) (p1 + p2) p' - kappa_tau sqrt(eps) p1 p'_v
/// on (atom1, atom2, vacuum, signal), i.e. y = (x1, p1, x2, p2, x'_v, p'_v,
/// x', p'). All p's commute with H, so S = I + (shift of the x's) exactly.
SymplecticMap asymmetric_step_map(const ChannelParams& params);

/// Probe light diag(1/r, r) plus vacuum, expressed in the detected
/// (signal) and undetected (vacuum) output modes.
GaussianState probe_light(double epsilon, double r, LightBasis basis,
                          ModeLabel signal = ModeLabel::signal(),
                          ModeLabel vacuum = ModeLabel::vacuum());

/// Stepped simulation: per segment attach fresh light, apply the step map,
/// trace out the undetected port and condition on x'. Starts from two
/// vacuum gases.
Trajectory run_asymmetric(const ChannelParams& params,
                          const RunOptions& options = {});

/// Closed-form gamma12 of the one-way scheme at time t. The v_x2 entry uses
/// 1 + t kappa2 (1-eps)(1 + (r-1)(1-eps)), the form the stepped simulation
/// produces. kDirect replaces v_x1 and c_x by 1 + t kappa2 r and
/// t kappa2 (1-eps) r.
Eigen::Matrix4d analytic_asymmetric_gamma(
    double epsilon, double r, double kappa2, double t,
    LightBasis basis = LightBasis::kFlippedVacuumPort);

TwoModeSummary analytic_asymmetric_covariance(
    const ChannelParams& params, double t,
    LightBasis basis = LightBasis::kFlippedVacuumPort);

/// t -> infinity limit of N for the one-way scheme:
///   N^2 = eps (1 - eps + r eps) / (r (2 - 3 eps)^2 + 9 eps (1 - eps)).
/// Equals 1/3 at eps = 1/3 for every r, eps / (2 - 3 eps) for r -> infinity
/// and 1/3 for r -> 0.
double asymptotic_asymmetric_negativity(double epsilon, double r);

}  // namespace lossycv

#endif  // LOSSYCV_ASYMMETRIC_HPP
